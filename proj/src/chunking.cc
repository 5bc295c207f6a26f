#include "tagimpact/chunking.h"

#include <algorithm>
#include <sstream>

#include "tagimpact/errors.h"
#include "tagimpact/external_tagger.h"

namespace tagimpact {
namespace {

template <typename F>
std::vector<std::uint8_t> to_symbols(std::span<const PosTag> tags, F &&map) {
  std::vector<std::uint8_t> symbols(tags.size());
  for (std::size_t i = 0; i < tags.size(); ++i) {
    symbols[i] = static_cast<std::uint8_t>(symbol_of(map(tags[i])));
  }
  return symbols;
}

void scan(const TagPattern &pattern, std::span<const std::uint8_t> symbols,
          std::size_t begin, std::size_t end, ChunkKind kind,
          std::vector<ChunkSpan> &out) {
  std::size_t i = begin;
  while (i < end) {
    std::size_t len = pattern.longest_match(symbols, i, end);
    if (len > 0) {
      out.push_back({kind, i, i + len});
      i += len;
    } else {
      ++i;
    }
  }
}

void scan_runs(const TagPattern &pattern, std::span<const std::uint8_t> symbols,
               const std::vector<bool> &blocked, ChunkKind kind,
               std::vector<ChunkSpan> &out) {
  const std::size_t n = symbols.size();
  std::size_t i = 0;
  while (i < n) {
    if (!blocked.empty() && blocked[i]) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < n && (blocked.empty() || !blocked[run_end])) ++run_end;
    scan(pattern, symbols, i, run_end, kind, out);
    i = run_end;
  }
}

void sort_spans(std::vector<ChunkSpan> &spans) {
  std::sort(spans.begin(), spans.end(),
            [](const ChunkSpan &a, const ChunkSpan &b) { return a.start < b.start; });
}

PosTag protect_one(PosTag t) { return t.protectable() ? t.protect() : t; }

}  // namespace

TaggedSentence protect_verb_tags(TaggedSentence tagged) {
  for (PosTag &t : tagged.tags) {
    if (t.is_protected()) {
      throw AlreadyProtected("tag " + serialize(t) + " is already protected");
    }
    t = protect_one(t);
  }
  return tagged;
}

TaggedSentence deprotect_verb_tags(TaggedSentence tagged) {
  for (PosTag &t : tagged.tags) t = t.unprotect();
  return tagged;
}

std::vector<ChunkSpan> recognize_noun_phrases(std::span<const PosTag> tags,
                                              const ChunkGrammar &grammar) {
  auto symbols = to_symbols(tags, [](PosTag t) { return t; });
  std::vector<ChunkSpan> spans;
  scan(grammar.np(), symbols, 0, symbols.size(), ChunkKind::NounPhrase, spans);
  return spans;
}

std::vector<ChunkSpan> recognize_verb_phrases(std::span<const PosTag> tags,
                                              const std::vector<bool> &blocked,
                                              const ChunkGrammar &grammar) {
  if (!blocked.empty() && blocked.size() != tags.size()) {
    throw InvalidArgument("recognize_verb_phrases: blocked size mismatch");
  }
  auto symbols = to_symbols(tags, [](PosTag t) { return t; });
  std::vector<ChunkSpan> spans;
  scan_runs(grammar.vp(), symbols, blocked, ChunkKind::VerbPhrase, spans);
  return spans;
}

std::vector<ChunkSpan> chunk_tags(std::span<const PosTag> tags,
                                  const ChunkGrammar &grammar) {
  for (PosTag t : tags) {
    if (t.is_protected()) {
      throw AlreadyProtected("tag " + serialize(t) + " is already protected");
    }
  }
  std::vector<ChunkSpan> spans;
  auto protected_symbols = to_symbols(tags, protect_one);
  scan(grammar.np(), protected_symbols, 0, protected_symbols.size(),
       ChunkKind::NounPhrase, spans);

  std::vector<bool> blocked(tags.size(), false);
  for (const ChunkSpan &s : spans) {
    std::fill(blocked.begin() + s.start, blocked.begin() + s.end, true);
  }
  auto plain_symbols = to_symbols(tags, [](PosTag t) { return t; });
  scan_runs(grammar.vp(), plain_symbols, blocked, ChunkKind::VerbPhrase, spans);
  sort_spans(spans);
  return spans;
}

ChunkedSentence chunk_tagged(const TaggedSentence &tagged,
                             const ChunkGrammar &grammar) {
  return {tagged, chunk_tags(tagged.tags, grammar)};
}

std::vector<ChunkedSentence> chunk_corpus(
    const std::vector<TaggedSentence> &corpus, const ChunkGrammar &grammar) {
  std::vector<ChunkedSentence> out(corpus.size());
  const auto n = static_cast<std::ptrdiff_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = chunk_tagged(corpus[i], grammar);
  }
  return out;
}

std::vector<ChunkedSentence> chunk_corpus_serial(
    const std::vector<TaggedSentence> &corpus, const ChunkGrammar &grammar) {
  std::vector<ChunkedSentence> out;
  out.reserve(corpus.size());
  for (const TaggedSentence &s : corpus) out.push_back(chunk_tagged(s, grammar));
  return out;
}

std::string render_chunked(const ChunkedSentence &sentence) {
  const TaggedSentence &t = sentence.tagged;
  std::string out;
  std::size_t next_span = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!out.empty()) out += ' ';
    const ChunkSpan *span =
        next_span < sentence.spans.size() ? &sentence.spans[next_span] : nullptr;
    if (span && span->start == i) {
      out += span->kind == ChunkKind::NounPhrase ? "(NP " : "(VP ";
    }
    out += t.words[i];
    out += '_';
    out += serialize(t.tags[i]);
    if (span && span->end == i + 1) {
      out += ')';
      ++next_span;
    }
  }
  return out;
}

ChunkedSentence parse_chunked(std::string_view line, SentenceId source) {
  ChunkedSentence out;
  out.tagged.source = std::move(source);
  std::istringstream in{std::string(line)};
  std::string token;
  bool open = false;
  ChunkKind kind = ChunkKind::NounPhrase;
  std::size_t start = 0;
  while (in >> token) {
    if (token == "(NP" || token == "(VP") {
      if (open) throw FormatError("nested chunk in: " + std::string(line));
      open = true;
      kind = token == "(NP" ? ChunkKind::NounPhrase : ChunkKind::VerbPhrase;
      start = out.tagged.size();
      continue;
    }
    bool close = false;
    if (open && token.size() > 1 && token.back() == ')') {
      // "x_)" is the word x tagged ")"; only strip when a valid pair remains.
      std::string_view stripped(token.data(), token.size() - 1);
      std::size_t sep = stripped.rfind('_');
      if (sep != std::string_view::npos && sep + 1 < stripped.size()) {
        try {
          parse_tag(stripped.substr(sep + 1));
          token.pop_back();
          close = true;
        } catch (const UnknownTag &) {
        }
      }
    }
    auto [word, tag] = parse_word_tag(token);
    out.tagged.words.push_back(std::move(word));
    out.tagged.tags.push_back(tag);
    if (close) {
      out.spans.push_back({kind, start, out.tagged.size()});
      open = false;
    }
  }
  if (open) throw FormatError("unterminated chunk in: " + std::string(line));
  return out;
}

}  // namespace tagimpact
