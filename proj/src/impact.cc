#include "tagimpact/impact.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "tagimpact/chunking.h"
#include "tagimpact/errors.h"

namespace tagimpact {
namespace {

void check_threshold(double t, const char *name) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw InvalidArgument(std::string(name) + " must lie in (0, 1]");
  }
}

std::vector<TagPair> select_subgroups(const TagErrorGroup &group,
                                      double subgroup_threshold) {
  std::vector<TagPair> pairs;
  double before = 0;
  for (const auto &sub : group.subgroups) {
    if (before >= subgroup_threshold) break;
    pairs.emplace_back(group.gold, sub.assigned);
    before = sub.cumulative_fraction;
  }
  return pairs;
}

std::string join(const OccurrenceProfile &positions) { return to_string(positions); }

OccurrenceProfile intersect(const OccurrenceProfile &a, const OccurrenceProfile &b) {
  OccurrenceProfile out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

OccurrenceProfile difference(const OccurrenceProfile &a, const OccurrenceProfile &b) {
  OccurrenceProfile out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

ReferenceVerdict row(Tag gold, Tag assigned, Verdict v, const char *reason) {
  return {PosTag(gold), PosTag(assigned), v, reason};
}

}  // namespace

std::vector<TagErrorGroup> group_errors(const ConfusionMatrix &m) {
  std::vector<TagErrorGroup> groups;
  std::uint64_t all_errors = m.errors();
  for (PosTag gold : all_tags()) {
    TagErrorGroup g;
    g.gold = gold;
    for (PosTag assigned : all_tags()) {
      if (assigned == gold) continue;
      if (std::uint64_t c = m.count(gold, assigned)) {
        g.subgroups.push_back({assigned, c, 0});
        g.total += c;
      }
    }
    if (g.total == 0) continue;
    std::sort(g.subgroups.begin(), g.subgroups.end(),
              [](const auto &a, const auto &b) {
                if (a.count != b.count) return a.count > b.count;
                return name_less(a.assigned, b.assigned);
              });
    std::uint64_t running = 0;
    for (auto &sub : g.subgroups) {
      running += sub.count;
      sub.cumulative_fraction =
          static_cast<double>(running) / static_cast<double>(g.total);
    }
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(), [](const auto &a, const auto &b) {
    if (a.total != b.total) return a.total > b.total;
    return name_less(a.gold, b.gold);
  });
  std::uint64_t running = 0;
  for (auto &g : groups) {
    running += g.total;
    g.cumulative_fraction =
        static_cast<double>(running) / static_cast<double>(all_errors);
  }
  return groups;
}

std::vector<TagPair> select_examined(const std::vector<TagErrorGroup> &groups,
                                     double group_threshold,
                                     double subgroup_threshold) {
  check_threshold(group_threshold, "group threshold");
  check_threshold(subgroup_threshold, "subgroup threshold");
  std::vector<TagPair> pairs;
  double before = 0;
  for (const TagErrorGroup &g : groups) {
    if (before >= group_threshold) break;
    auto sub = select_subgroups(g, subgroup_threshold);
    pairs.insert(pairs.end(), sub.begin(), sub.end());
    before = g.cumulative_fraction;
  }
  return pairs;
}

std::vector<TagPair> select_examined(const std::vector<TagErrorGroup> &groups,
                                     const std::vector<PosTag> &gold_tags,
                                     double subgroup_threshold) {
  check_threshold(subgroup_threshold, "subgroup threshold");
  std::vector<TagPair> pairs;
  for (PosTag tag : gold_tags) {
    auto g = std::find_if(groups.begin(), groups.end(),
                          [&](const TagErrorGroup &x) { return x.gold == tag; });
    if (g == groups.end()) continue;
    auto sub = select_subgroups(*g, subgroup_threshold);
    pairs.insert(pairs.end(), sub.begin(), sub.end());
  }
  return pairs;
}

const std::vector<PosTag> &reference_examined_tags() {
  static const std::vector<PosTag> tags = {Tag::NN,  Tag::JJ,  Tag::NNS,
                                           Tag::SYM, Tag::VBP, Tag::VBD};
  return tags;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Nullified: return "Nullified";
    case Verdict::Detrimental: return "Detrimental";
    case Verdict::ContextDependent: return "ContextDependent";
  }
  return "ContextDependent";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "Nullified") return Verdict::Nullified;
  if (text == "Detrimental") return Verdict::Detrimental;
  if (text == "ContextDependent") return Verdict::ContextDependent;
  throw FormatError("unknown verdict '" + std::string(text) + "'");
}

const std::vector<ReferenceVerdict> &reference_verdicts() {
  using enum Tag;
  constexpr Verdict N = Verdict::Nullified;
  constexpr Verdict D = Verdict::Detrimental;
  static const std::vector<ReferenceVerdict> rows = {
      row(NN, NNP, N, "NNP and NN are interchangeable noun-phrase tags"),
      row(NN, JJ, N, "JJ stands in for NN as a noun-phrase modifier"),
      row(NN, CD, N, "CD and NN are interchangeable noun-phrase tags"),
      row(NN, VBG, D, "VBG is a protected verb tag"),
      row(JJ, NN, N, "NN stands in for JJ as a noun-phrase modifier"),
      row(JJ, NNP, N, "NNP stands in for JJ as a noun-phrase modifier"),
      row(JJ, VBN, D, "VBN is a protected verb tag"),
      row(JJ, VBG, D, "VBG is a protected verb tag"),
      row(NNS, NNP, N, "NNP and NNS are interchangeable noun-phrase tags"),
      row(NNS, NN, N, "NN and NNS are interchangeable noun-phrase tags"),
      row(NNS, VBZ, N, "VBZ is not protected; counted as harmless"),
      row(SYM, NotAssigned, N, "neither tag is used by the chunker"),
      row(SYM, NN, D, "NN is picked up by noun-phrase recognition"),
      row(SYM, Dash, N, "neither tag is used by the chunker"),
      row(VBP, VB, D, "VB can close an infinitive tail that VBP cannot"),
      row(VBP, NN, N, "counted as harmless"),
      row(VBD, VBN, D, "VBN can close an infinitive tail that VBD cannot"),
      row(VBD, JJ, D, "VBD is a protected verb tag"),
  };
  return rows;
}

std::vector<ReferenceVerdict> read_verdicts_tsv(std::istream &in) {
  std::vector<ReferenceVerdict> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind("gold\t", 0) == 0) continue;
    std::istringstream fields(line);
    std::string gold, assigned, verdict, reason;
    if (!std::getline(fields, gold, '\t') || !std::getline(fields, assigned, '\t') ||
        !std::getline(fields, verdict, '\t')) {
      throw FormatError("verdict line " + std::to_string(lineno) +
                        ": expected gold<TAB>assigned<TAB>verdict<TAB>reason");
    }
    std::getline(fields, reason);
    rows.push_back({parse_tag(gold), parse_tag(assigned), parse_verdict(verdict), reason});
  }
  return rows;
}

void write_verdicts_tsv(const std::vector<ReferenceVerdict> &rows,
                        std::ostream &out) {
  out << "gold\tassigned\tverdict\treason\n";
  for (const auto &r : rows) {
    out << serialize(r.gold) << '\t' << serialize(r.assigned) << '\t'
        << verdict_name(r.verdict) << '\t' << r.reason << '\n';
  }
}

ImpactVerdict classify_pair(PosTag gold, PosTag assigned,
                            const ChunkGrammar &grammar, bool paper_compat) {
  gold = gold.unprotect();
  assigned = assigned.unprotect();
  if (gold == assigned) return {Verdict::Nullified, "identical tags"};

  if (paper_compat) {
    for (const ReferenceVerdict &r : reference_verdicts()) {
      if (r.gold == gold && r.assigned == assigned) return {r.verdict, r.reason};
    }
  }

  const std::string g = serialize(gold);
  const std::string a = serialize(assigned);
  OccurrenceProfile pg = occurrence_profile(gold, grammar);
  OccurrenceProfile pa = occurrence_profile(assigned, grammar);

  ImpactVerdict v;
  if (pg == pa) {
    v = {Verdict::Nullified, a + " fills exactly the positions of " + g + ": " + join(pg)};
  } else if (gold.protectable() != assigned.protectable()) {
    v = {Verdict::Detrimental,
         "protected verb tag: " + (gold.protectable() ? g : a) +
             " is hidden from noun-phrase recognition, " +
             (gold.protectable() ? a : g) + " is not"};
  } else if (OccurrenceProfile shared = intersect(pg, pa); shared.empty()) {
    v = {Verdict::Detrimental,
         a + " " + join(pa) + " can fill no position of " + g + " " + join(pg)};
  } else {
    OccurrenceProfile only_g = difference(pg, pa);
    OccurrenceProfile only_a = difference(pa, pg);
    std::string reason = a + " shares " + join(shared) + " with " + g;
    if (!only_g.empty()) reason += "; only " + g + " fills " + join(only_g);
    if (!only_a.empty()) reason += "; only " + a + " fills " + join(only_a);
    v = {Verdict::ContextDependent, reason};
  }

  if (paper_compat && v.verdict == Verdict::ContextDependent) {
    OccurrenceProfile shared = intersect(pg, pa);
    bool np_shared = shared.count(GrammarPosition::NpModifier) ||
                     shared.count(GrammarPosition::NpHead);
    v.verdict = np_shared ? Verdict::Nullified : Verdict::Detrimental;
  }
  return v;
}

bool substitution_oracle(const TaggedSentence &tagged, std::size_t position,
                         PosTag assigned, const ChunkGrammar &grammar) {
  if (position >= tagged.size()) {
    throw InvalidArgument("substitution_oracle: position out of range");
  }
  std::vector<PosTag> changed = tagged.tags;
  changed[position] = assigned.unprotect();
  return chunk_tags(tagged.tags, grammar) == chunk_tags(changed, grammar);
}

AccuracyReport functional_accuracy(const ConfusionMatrix &m,
                                   const VerdictMap &verdicts) {
  if (m.total() == 0) throw EmptyMatrix("functional accuracy of an empty matrix");
  AccuracyReport r;
  r.total_tokens = m.total();
  r.correct_tokens = m.diagonal();
  for (const auto &[pair, verdict] : verdicts) {
    if (pair.first == pair.second) continue;
    std::uint64_t c = m.count(pair.first, pair.second);
    r.examined_errors += c;
    if (verdict.verdict == Verdict::Nullified) r.nullified_errors += c;
  }
  r.raw_accuracy = static_cast<double>(r.correct_tokens) / static_cast<double>(r.total_tokens);
  r.functional_accuracy = static_cast<double>(r.correct_tokens + r.nullified_errors) /
                          static_cast<double>(r.total_tokens);
  return r;
}

void write_impact_report(const std::vector<TagErrorGroup> &groups,
                         const std::vector<TagPair> &examined,
                         const VerdictMap &verdicts,
                         const AccuracyReport &accuracy, std::ostream &out) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2);
  s << "error groups (gold tag, errors, cumulative %):\n";
  for (const auto &g : groups) {
    s << "  " << std::left << std::setw(12) << serialize(g.gold) << std::right
      << std::setw(8) << g.total << std::setw(9) << 100 * g.cumulative_fraction << '\n';
  }
  s << "examined pairs:\n";
  for (const auto &pair : examined) {
    auto it = verdicts.find(pair);
    s << "  " << std::left << std::setw(6) << serialize(pair.first) << " -> "
      << std::setw(12) << serialize(pair.second) << std::right;
    if (it != verdicts.end()) {
      s << std::left << std::setw(17) << verdict_name(it->second.verdict)
        << std::right << it->second.reason;
    }
    s << '\n';
  }
  s << std::setprecision(4);
  s << "tokens              " << accuracy.total_tokens << '\n'
    << "correct             " << accuracy.correct_tokens << '\n'
    << "examined errors     " << accuracy.examined_errors << '\n'
    << "nullified errors    " << accuracy.nullified_errors << '\n'
    << "tagging accuracy    " << accuracy.raw_accuracy << '\n'
    << "functional accuracy " << accuracy.functional_accuracy << '\n';
  out << s.str();
}

}  // namespace tagimpact
