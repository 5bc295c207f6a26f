#ifndef TAGIMPACT_EXTERNAL_TAGGER_H_
#define TAGIMPACT_EXTERNAL_TAGGER_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tagimpact/tagging.h"
#include "tagimpact/textprep.h"

namespace tagimpact {

// Runs a third-party tagger as a child process.
//
// Input: one sentence per line, tokens joined by single spaces.
// Output: one line per input line, tokens as word_TAG (the last underscore
// separates word and tag) joined by spaces.
//
// In temp-file mode the command template must contain {in} and {out}, which
// are replaced by quoted paths, e.g. "medpost -text -token -penn < {in} > {out}".
// In line-stream mode the command reads the sentences on stdin and writes the
// tagged lines to stdout.
struct ExternalTaggerConfig {
  enum class IoMode { kTempFile, kLineStream };

  std::string command;
  IoMode io_mode = IoMode::kTempFile;
  double timeout_seconds = 300;
  std::filesystem::path scratch_dir = std::filesystem::temp_directory_path();

  // Throws InvalidArgument when the template lacks a required placeholder.
  void validate() const;
};

// Throws InvalidArgument (empty batch, bad config), TaggerProcessFailure
// (spawn failure, nonzero exit, timeout), TokenCountMismatch, UnknownTag.
// Scratch files are removed on every path.
std::vector<TaggedSentence> tag_via_external(
    const std::vector<TokenizedSentence> &sentences,
    const ExternalTaggerConfig &config);

// Splits "word_TAG" at the last underscore.
std::pair<std::string, PosTag> parse_word_tag(std::string_view token);

}  // namespace tagimpact

#endif  // TAGIMPACT_EXTERNAL_TAGGER_H_
