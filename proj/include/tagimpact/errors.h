#ifndef TAGIMPACT_ERRORS_H_
#define TAGIMPACT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tagimpact {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: unknown tags, bad TSV rows, misaligned corpora.
class DataError : public Error {
 public:
  using Error::Error;
};

class UnknownTag : public DataError {
 public:
  explicit UnknownTag(const std::string &text)
      : DataError("unknown tag '" + text + "'"), text_(text) {}
  const std::string &text() const { return text_; }

 private:
  std::string text_;
};

class FormatError : public DataError {
 public:
  using DataError::DataError;
};

class AlignmentError : public DataError {
 public:
  using DataError::DataError;
};

class AlreadyProtected : public Error {
 public:
  using Error::Error;
};

class EmptyMatrix : public Error {
 public:
  using Error::Error;
};

class DegenerateMatrix : public DataError {
 public:
  using DataError::DataError;
};

// Failures of an external tagger process.
class TaggerError : public Error {
 public:
  using Error::Error;
};

class TaggerProcessFailure : public TaggerError {
 public:
  using TaggerError::TaggerError;
};

class TokenCountMismatch : public TaggerError {
 public:
  using TaggerError::TaggerError;
};

// Violated precondition on an argument (empty batch, bad threshold, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace tagimpact

#endif  // TAGIMPACT_ERRORS_H_
