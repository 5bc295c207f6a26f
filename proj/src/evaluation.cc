#include "tagimpact/evaluation.h"

#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "tagimpact/errors.h"

namespace tagimpact {

std::uint64_t ConfusionMatrix::diagonal() const {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < kNumTags; ++i) sum += counts_[i][i];
  return sum;
}

std::uint64_t ConfusionMatrix::row_total(PosTag gold) const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts_[gold.index()]) sum += c;
  return sum;
}

ConfusionMatrix &ConfusionMatrix::operator+=(const ConfusionMatrix &other) {
  for (std::size_t g = 0; g < kNumTags; ++g) {
    for (std::size_t a = 0; a < kNumTags; ++a) counts_[g][a] += other.counts_[g][a];
  }
  total_ += other.total_;
  return *this;
}

void ConfusionMatrix::write_tsv(std::ostream &out) const {
  out << "gold\tassigned\tcount\n";
  for (PosTag g : all_tags()) {
    for (PosTag a : all_tags()) {
      if (std::uint64_t c = count(g, a)) {
        out << serialize(g) << '\t' << serialize(a) << '\t' << c << '\n';
      }
    }
  }
}

ConfusionMatrix ConfusionMatrix::read_tsv(std::istream &in) {
  ConfusionMatrix m;
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("gold\t", 0) == 0) continue;
    }
    std::istringstream fields(line);
    std::string gold, assigned, count;
    if (!std::getline(fields, gold, '\t') || !std::getline(fields, assigned, '\t') ||
        !std::getline(fields, count, '\t')) {
      throw FormatError("confusion line " + std::to_string(lineno) +
                        ": expected gold<TAB>assigned<TAB>count");
    }
    std::uint64_t n = 0;
    try {
      std::size_t used = 0;
      long long v = std::stoll(count, &used);
      if (used != count.size() || v < 0) throw std::invalid_argument(count);
      n = static_cast<std::uint64_t>(v);
    } catch (const std::exception &) {
      throw FormatError("confusion line " + std::to_string(lineno) +
                        ": bad count '" + count + "'");
    }
    m.add(parse_tag(gold), parse_tag(assigned), n);
  }
  return m;
}

ConfusionMatrix build_confusion(const std::vector<TaggedSentence> &gold,
                                const std::vector<TaggedSentence> &predicted) {
  if (gold.size() != predicted.size()) {
    throw AlignmentError("gold has " + std::to_string(gold.size()) +
                         " sentences, prediction has " +
                         std::to_string(predicted.size()));
  }
  ConfusionMatrix m;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const TaggedSentence &g = gold[s];
    const TaggedSentence &p = predicted[s];
    if (g.words != p.words) {
      throw AlignmentError("token texts differ in sentence " + std::to_string(s + 1));
    }
    for (std::size_t i = 0; i < g.size(); ++i) m.add(g.tags[i], p.tags[i]);
  }
  return m;
}

double tagging_accuracy(const ConfusionMatrix &m) {
  if (m.total() == 0) throw EmptyMatrix("tagging accuracy of an empty matrix");
  return static_cast<double>(m.diagonal()) / static_cast<double>(m.total());
}

double f_score(double precision, double recall) {
  double sum = precision + recall;
  return sum > 0 ? 2 * precision * recall / sum : 0.0;
}

EvalReport EvalReport::from_counts(std::uint64_t tp, std::uint64_t fp,
                                   std::uint64_t fn) {
  EvalReport r;
  r.true_positives = tp;
  r.false_positives = fp;
  r.false_negatives = fn;
  r.precision = tp + fp ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  r.recall = tp + fn ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  r.f_score = tagimpact::f_score(r.precision, r.recall);
  return r;
}

EvalReport evaluate_relations(const std::vector<DocRelation> &predicted,
                              const std::vector<DocRelation> &gold,
                              bool directional) {
  using Key = std::tuple<std::string, std::string, std::string>;
  auto keys = [directional](const std::vector<DocRelation> &rels) {
    std::set<Key> out;
    for (const DocRelation &r : rels) {
      Relation c = r.relation;
      c.directional = directional;
      c = c.canonical();
      out.emplace(r.doc_id, c.agent, c.target);
    }
    return out;
  };
  std::set<Key> p = keys(predicted);
  std::set<Key> g = keys(gold);
  std::uint64_t tp = 0;
  for (const Key &k : p) tp += g.count(k);
  return EvalReport::from_counts(tp, p.size() - tp, g.size() - tp);
}

void write_report_tsv(const EvalReport &r, std::ostream &out) {
  out << "tp\tfp\tfn\tprecision\trecall\tf_score\n";
  out << r.true_positives << '\t' << r.false_positives << '\t'
      << r.false_negatives << '\t' << std::fixed << std::setprecision(4)
      << r.precision << '\t' << r.recall << '\t' << r.f_score << '\n';
  out.unsetf(std::ios::fixed);
}

void write_report_text(const EvalReport &r, std::ostream &out) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3);
  s << "true positives   " << r.true_positives << '\n'
    << "false positives  " << r.false_positives << '\n'
    << "false negatives  " << r.false_negatives << '\n'
    << "precision        " << r.precision << '\n'
    << "recall           " << r.recall << '\n'
    << "F-score          " << r.f_score << '\n';
  out << s.str();
}

}  // namespace tagimpact
