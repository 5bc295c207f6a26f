#include "tagimpact/textprep.h"

#include <cctype>

namespace tagimpact {
namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool is_closer(char c) {
  return c == ')' || c == ']' || c == '}' || c == '"' || c == '\'';
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_number(std::string_view word) {
  bool digit = false;
  for (char c : word) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '+') {
      return false;
    }
  }
  return digit;
}

}  // namespace

std::string expand_abbreviations(std::string_view text,
                                 const AbbreviationTable &table) {
  if (table.empty()) return std::string(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    bool boundary_before = i == 0 || !is_word_char(text[i - 1]);
    const std::pair<const std::string, std::string> *best = nullptr;
    if (boundary_before) {
      for (const auto &entry : table) {
        const std::string &shortform = entry.first;
        if (shortform.empty() || text.compare(i, shortform.size(), shortform) != 0) {
          continue;
        }
        std::size_t after = i + shortform.size();
        if (after < text.size() && is_word_char(text[after]) &&
            is_word_char(shortform.back())) {
          continue;
        }
        if (!best || shortform.size() > best->first.size()) best = &entry;
      }
    }
    if (best) {
      out += best->second;
      i += best->first.size();
    } else {
      out += text[i++];
    }
  }
  return out;
}

const std::set<std::string> &default_non_splitting_tokens() {
  // Keep in sync with data/non_splitting_tokens.txt.
  static const std::set<std::string> tokens = {
      "al.",   "approx.", "ca.",   "cf.",  "co.",   "dr.",    "e.g.",
      "eq.",   "et.",     "etc.",  "fig.", "figs.", "i.e.",   "inc.",
      "ltd.",  "mr.",     "mrs.",  "no.",  "nos.",  "prof.",  "ref.",
      "resp.", "sp.",     "spp.",  "st.",  "subsp.", "vol.",  "vs.",
  };
  return tokens;
}

bool SentenceSplitter::is_exception(std::string_view word) const {
  // word includes its trailing period
  std::string_view stem = word.substr(0, word.size() - 1);
  while (!stem.empty() && (stem.front() == '(' || stem.front() == '[' ||
                           stem.front() == '"' || stem.front() == '\'')) {
    stem.remove_prefix(1);
  }
  if (stem.size() == 1 && std::isupper(static_cast<unsigned char>(stem[0]))) {
    return true;
  }
  if (is_number(stem)) return true;
  std::string key = lower(stem);
  key += '.';
  return exceptions_.count(key) > 0;
}

std::vector<std::string> SentenceSplitter::split(std::string_view text) const {
  std::vector<std::string> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin < end) sentences.emplace_back(text.substr(begin, end - begin));
  };

  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t end = i + 1;
    while (end < text.size() && is_closer(text[end])) ++end;
    std::size_t next = end;
    while (next < text.size() && is_space(text[next])) ++next;
    bool at_end = next == text.size();
    if (!at_end) {
      if (next == end) continue;  // no whitespace after the punctuation
      if (!std::isupper(static_cast<unsigned char>(text[next]))) continue;
    }
    if (c == '.') {
      std::size_t word_start = i;
      while (word_start > begin && !is_space(text[word_start - 1])) --word_start;
      if (!at_end && is_exception(text.substr(word_start, i + 1 - word_start))) {
        continue;
      }
    }
    emit(begin, end);
    begin = end;
    i = end - 1;
  }
  emit(begin, text.size());
  return sentences;
}

std::vector<std::string> split_sentences(std::string_view text) {
  static const SentenceSplitter splitter;
  return splitter.split(text);
}

TokenizedSentence tokenize(std::string_view sentence, SentenceId source) {
  TokenizedSentence out;
  out.source = std::move(source);

  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && is_space(sentence[i])) ++i;
    std::size_t j = i;
    while (j < sentence.size() && !is_space(sentence[j])) ++j;
    if (j > i) words.push_back(sentence.substr(i, j - i));
    i = j;
  }

  auto is_opener = [](char c) {
    return c == '(' || c == '[' || c == '{' || c == '"' || c == '`' || c == '\'';
  };
  auto is_trailer = [](char c) {
    return c == ')' || c == ']' || c == '}' || c == '"' || c == '\'' ||
           c == ',' || c == ';' || c == ':';
  };

  for (std::size_t w = 0; w < words.size(); ++w) {
    std::string_view word = words[w];
    bool last = w + 1 == words.size();

    while (word.size() > 1 && is_opener(word.front())) {
      out.tokens.emplace_back(1, word.front());
      word.remove_prefix(1);
    }
    std::vector<std::string> trailing;
    while (word.size() > 1) {
      char c = word.back();
      bool final_mark = last && (c == '.' || c == '!' || c == '?');
      if (!is_trailer(c) && !final_mark) break;
      // Keep a closing bracket that has its opener inside the word: "sigma(B)".
      if (c == ')' && word.find('(') != std::string_view::npos) break;
      if (c == ']' && word.find('[') != std::string_view::npos) break;
      trailing.emplace_back(1, c);
      word.remove_suffix(1);
    }
    out.tokens.emplace_back(word);
    out.tokens.insert(out.tokens.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

std::vector<TokenizedSentence> prepare_document(
    const Document &doc, const AbbreviationTable &abbreviations,
    const SentenceSplitter &splitter) {
  std::vector<TokenizedSentence> out;
  std::string expanded = expand_abbreviations(doc.text, abbreviations);
  std::size_t index = 0;
  for (const std::string &sentence : splitter.split(expanded)) {
    TokenizedSentence tokens = tokenize(sentence, {doc.id, index});
    if (tokens.tokens.empty()) continue;
    out.push_back(std::move(tokens));
    ++index;
  }
  return out;
}

}  // namespace tagimpact
