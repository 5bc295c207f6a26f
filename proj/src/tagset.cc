#include "tagimpact/tagset.h"

#include <algorithm>
#include <optional>

#include "tagimpact/errors.h"

namespace tagimpact {
namespace {

constexpr std::array<std::string_view, kNumTags> kTagNames = {
    "CC",  "CD",   "DT",  "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",
    "MD",  "NN",   "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",
    "RBR", "RBS",  "RP",  "SYM", "TO",  "UH",  "VB",  "VBD", "VBG", "VBN",
    "VBP", "VBZ",  "WDT", "WP",  "WP$", "WRB", "#",   "$",   ".",   ",",
    ":",   "(",    ")",   "``",  "''",  "-",   "NotAssigned",
};

std::array<PosTag, kNumTags> make_all_tags() {
  std::array<PosTag, kNumTags> tags;
  for (std::size_t i = 0; i < kNumTags; ++i) {
    tags[i] = PosTag(static_cast<Tag>(i));
  }
  return tags;
}

// Spellings some taggers use for the same tags.
std::optional<Tag> alias(std::string_view text) {
  if (text == "-LRB-" || text == "-LCB-") return Tag::LeftParen;
  if (text == "-RRB-" || text == "-RCB-") return Tag::RightParen;
  if (text == "Not Assigned") return Tag::NotAssigned;
  return std::nullopt;
}

}  // namespace

const std::array<PosTag, kNumTags> &all_tags() {
  static const std::array<PosTag, kNumTags> tags = make_all_tags();
  return tags;
}

std::string_view tag_name(Tag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

PosTag parse_tag(std::string_view text) {
  if (text.empty()) throw UnknownTag(std::string(text));
  std::string_view bare = text;
  bool is_protected = false;
  if (bare.size() > kProtectedSuffix.size() && bare.ends_with(kProtectedSuffix)) {
    bare.remove_suffix(kProtectedSuffix.size());
    is_protected = true;
  }
  auto it = std::find(kTagNames.begin(), kTagNames.end(), bare);
  std::optional<Tag> id;
  if (it != kTagNames.end()) {
    id = static_cast<Tag>(it - kTagNames.begin());
  } else {
    id = alias(bare);
  }
  if (!id) throw UnknownTag(std::string(text));
  PosTag tag(*id, is_protected);
  if (is_protected && !tag.protectable()) throw UnknownTag(std::string(text));
  return tag;
}

std::string serialize(PosTag tag) {
  std::string out(tag_name(tag.id()));
  if (tag.is_protected()) out += kProtectedSuffix;
  return out;
}

std::size_t symbol_of(PosTag tag) {
  if (!tag.is_protected()) return tag.index();
  switch (tag.id()) {
    case Tag::VBD: return kNumTags;
    case Tag::VBG: return kNumTags + 1;
    default: return kNumTags + 2;  // VBN
  }
}

std::string_view position_name(GrammarPosition position) {
  switch (position) {
    case GrammarPosition::NpDeterminer: return "NP-determiner";
    case GrammarPosition::NpPredeterminer: return "NP-predeterminer";
    case GrammarPosition::NpModifier: return "NP-modifier";
    case GrammarPosition::NpHead: return "NP-head";
    case GrammarPosition::NpStandalone: return "NP-standalone";
    case GrammarPosition::NpPossessiveLink: return "NP-possessive-link";
    case GrammarPosition::VpAdverb: return "VP-adverb";
    case GrammarPosition::VpModal: return "VP-modal";
    case GrammarPosition::VpVerbCore: return "VP-verb-core";
    case GrammarPosition::VpParticle: return "VP-particle";
    case GrammarPosition::VpInfinitiveMarker: return "VP-infinitive-marker";
    case GrammarPosition::VpInfinitiveVerb: return "VP-infinitive-verb";
    case GrammarPosition::VpInfinitiveAdverb: return "VP-infinitive-adverb";
    case GrammarPosition::Unused: return "unused";
  }
  return "unused";
}

std::string to_string(const OccurrenceProfile &profile) {
  std::string out = "{";
  for (auto position : profile) {
    if (out.size() > 1) out += ", ";
    out += position_name(position);
  }
  out += "}";
  return out;
}

}  // namespace tagimpact
