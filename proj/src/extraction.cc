#include "tagimpact/extraction.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "tagimpact/errors.h"

namespace tagimpact {
namespace {

bool is_noun_head(PosTag t) {
  switch (t.id()) {
    case Tag::NN: case Tag::NNS: case Tag::NNP: case Tag::NNPS: case Tag::CD:
      return true;
    default:
      return false;
  }
}

bool is_verb_core(PosTag t) {
  switch (t.id()) {
    case Tag::VB: case Tag::VBD: case Tag::VBG: case Tag::VBN: case Tag::VBP:
    case Tag::VBZ:
      return true;
    default:
      return false;
  }
}

std::string span_text(const TaggedSentence &s, const ChunkSpan &span) {
  std::string text;
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (i > span.start) text += ' ';
    text += s.words[i];
  }
  return text;
}

std::vector<std::string> split_words(const std::string &text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::size_t noun_phrase_head(const TaggedSentence &s, const ChunkSpan &span) {
  for (std::size_t i = span.end; i > span.start; --i) {
    if (is_noun_head(s.tags[i - 1])) return i - 1;
  }
  return span.end - 1;
}

std::size_t main_verb(const TaggedSentence &s, const ChunkSpan &span) {
  std::size_t tail = span.end;
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (s.tags[i].id() == Tag::TO) {
      tail = i;
      break;
    }
  }
  for (std::size_t i = tail; i > span.start; --i) {
    if (is_verb_core(s.tags[i - 1])) return i - 1;
  }
  return span.end - 1;
}

std::vector<SvoTriple> extract_svo(const ChunkedSentence &chunked) {
  const TaggedSentence &s = chunked.tagged;
  const auto &spans = chunked.spans;
  std::vector<SvoTriple> triples;
  for (std::size_t v = 0; v < spans.size(); ++v) {
    if (spans[v].kind != ChunkKind::VerbPhrase) continue;

    const ChunkSpan *subject = nullptr;
    for (std::size_t k = v; k > 0; --k) {
      if (spans[k - 1].kind == ChunkKind::NounPhrase) {
        subject = &spans[k - 1];
        break;
      }
    }
    if (!subject) continue;

    SvoTriple triple;
    for (std::size_t k = v + 1; k < spans.size(); ++k) {
      if (spans[k].kind == ChunkKind::VerbPhrase) break;
      triple.objects.push_back(
          {spans[k], span_text(s, spans[k]), noun_phrase_head(s, spans[k])});
    }
    if (triple.objects.empty()) continue;

    triple.subject = {*subject, span_text(s, *subject), noun_phrase_head(s, *subject)};
    triple.verb = {spans[v], span_text(s, spans[v]), main_verb(s, spans[v])};
    triple.source = s.source;
    triples.push_back(std::move(triple));
  }
  return triples;
}

EntityDictionary::EntityDictionary(const std::vector<std::string> &forms,
                                   bool case_sensitive)
    : case_sensitive_(case_sensitive) {
  for (const std::string &form : forms) {
    std::vector<std::string> words = split_words(form);
    if (words.empty()) continue;
    std::vector<std::string> keys;
    for (const auto &w : words) keys.push_back(key(w));
    max_tokens_ = std::max(max_tokens_, keys.size());
    auto &bucket = entries_[keys.front()];
    bool seen = std::any_of(bucket.begin(), bucket.end(),
                            [&](const auto &e) { return e.first == keys; });
    if (!seen) bucket.emplace_back(std::move(keys), form);
  }
  for (auto &[first, bucket] : entries_) {
    std::stable_sort(bucket.begin(), bucket.end(), [](const auto &a, const auto &b) {
      return a.first.size() > b.first.size();
    });
  }
}

EntityDictionary EntityDictionary::load(std::istream &in, bool case_sensitive) {
  std::vector<std::string> forms;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t");
    forms.push_back(line.substr(a, b - a + 1));
  }
  return EntityDictionary(forms, case_sensitive);
}

EntityDictionary EntityDictionary::load_file(const std::string &path,
                                             bool case_sensitive) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open entity dictionary " + path);
  return load(in, case_sensitive);
}

std::string EntityDictionary::key(const std::string &token) const {
  if (case_sensitive_) return token;
  std::string out = token;
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool EntityDictionary::contains(const std::string &form) const {
  auto found = find_all(split_words(form));
  return found.size() == 1 && split_words(form).size() ==
                                  split_words(found.front()).size();
}

std::vector<std::string> EntityDictionary::find_all(
    const std::vector<std::string> &tokens) const {
  std::vector<std::string> found;
  std::size_t i = 0;
  while (i < tokens.size()) {
    auto bucket = entries_.find(key(tokens[i]));
    std::size_t matched = 0;
    if (bucket != entries_.end()) {
      for (const auto &[keys, form] : bucket->second) {
        if (i + keys.size() > tokens.size()) continue;
        bool ok = true;
        for (std::size_t k = 1; k < keys.size() && ok; ++k) {
          ok = key(tokens[i + k]) == keys[k];
        }
        if (ok) {
          found.push_back(form);
          matched = keys.size();
          break;
        }
      }
    }
    i += matched ? matched : 1;
  }
  return found;
}

Relation Relation::canonical() const {
  Relation r = *this;
  if (!r.directional && r.target < r.agent) std::swap(r.agent, r.target);
  return r;
}

std::vector<Relation> map_to_relations(const std::vector<SvoTriple> &triples,
                                       const EntityDictionary &dict,
                                       bool directional,
                                       const VerbTable &verbs) {
  if (dict.empty()) throw InvalidArgument("map_to_relations: empty dictionary");
  std::vector<Relation> out;
  std::set<Relation> seen;
  for (const SvoTriple &t : triples) {
    auto agents = dict.find_all(split_words(t.subject.text));
    if (agents.empty()) continue;
    std::vector<std::string> verb_words = split_words(t.verb.text);
    std::string verb = verb_words[t.verb.head - t.verb.span.start];
    if (auto v = verbs.find(verb); v != verbs.end()) verb = v->second;
    for (const PhraseRef &object : t.objects) {
      for (const std::string &target : dict.find_all(split_words(object.text))) {
        for (const std::string &agent : agents) {
          Relation r = Relation{agent, target, verb, directional}.canonical();
          if (seen.insert(r).second) out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

}  // namespace tagimpact
