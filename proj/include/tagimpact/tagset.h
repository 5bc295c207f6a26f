#ifndef TAGIMPACT_TAGSET_H_
#define TAGIMPACT_TAGSET_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace tagimpact {

// Penn Treebank tags: the 36 word tags, the 9 punctuation tags, and two
// sentinels emitted by some taggers ("-" and an unassigned marker).
enum class Tag : std::uint8_t {
  CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNS, NNP, NNPS, PDT,
  POS, PRP, PRPS, RB, RBR, RBS, RP, SYM, TO, UH, VB, VBD, VBG, VBN, VBP,
  VBZ, WDT, WP, WPS, WRB,
  Hash, Dollar, Period, Comma, Colon, LeftParen, RightParen, OpenQuote,
  CloseQuote,
  Dash, NotAssigned,
};

inline constexpr std::size_t kNumTags = 47;
inline constexpr std::size_t kNumPennTags = 45;

// Suffix marking a protected verb tag in text form, e.g. "VBN/VX".
inline constexpr std::string_view kProtectedSuffix = "/VX";

class PosTag {
 public:
  constexpr PosTag() = default;
  constexpr PosTag(Tag id, bool is_protected = false)  // NOLINT
      : id_(id), protected_(is_protected) {}

  constexpr Tag id() const { return id_; }
  constexpr bool is_protected() const { return protected_; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(id_); }

  // Only VBD, VBG and VBN may carry the protection marker.
  constexpr bool protectable() const {
    return id_ == Tag::VBD || id_ == Tag::VBG || id_ == Tag::VBN;
  }
  constexpr PosTag protect() const { return PosTag(id_, true); }
  constexpr PosTag unprotect() const { return PosTag(id_, false); }

  friend constexpr bool operator==(PosTag a, PosTag b) = default;
  friend constexpr auto operator<=>(PosTag a, PosTag b) = default;

 private:
  Tag id_ = Tag::NotAssigned;
  bool protected_ = false;
};

// Every member of the closed set, in declaration order.
const std::array<PosTag, kNumTags> &all_tags();

// Parses a tag string. A trailing "/VX" marks a protected VBD/VBG/VBN.
// Throws UnknownTag for anything outside the closed set.
PosTag parse_tag(std::string_view text);

// Inverse of parse_tag.
std::string serialize(PosTag tag);

// Name of the bare tag, without protection suffix.
std::string_view tag_name(Tag tag);

// Orders tags by name; used for deterministic tie-breaking in reports.
inline bool name_less(PosTag a, PosTag b) {
  return tag_name(a.id()) < tag_name(b.id());
}

// The alphabet seen by the chunking automata: one symbol per tag plus one per
// protected verb tag.
inline constexpr std::size_t kNumSymbols = kNumTags + 3;
std::size_t symbol_of(PosTag tag);

// Places a tag can be consumed by the chunking grammars.
enum class GrammarPosition : std::uint8_t {
  NpDeterminer,
  NpPredeterminer,
  NpModifier,
  NpHead,
  NpStandalone,
  NpPossessiveLink,
  VpAdverb,
  VpModal,
  VpVerbCore,
  VpParticle,
  VpInfinitiveMarker,
  VpInfinitiveVerb,
  VpInfinitiveAdverb,  // only with the literal infinitive-tail grammar
  Unused,
};

std::string_view position_name(GrammarPosition position);

using OccurrenceProfile = std::set<GrammarPosition>;

std::string to_string(const OccurrenceProfile &profile);

}  // namespace tagimpact

#endif  // TAGIMPACT_TAGSET_H_
