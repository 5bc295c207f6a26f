#include "tagimpact/cli.h"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "tagimpact/chunking.h"
#include "tagimpact/corpus_io.h"
#include "tagimpact/errors.h"
#include "tagimpact/evaluation.h"
#include "tagimpact/external_tagger.h"
#include "tagimpact/impact.h"
#include "tagimpact/perturb.h"
#include "tagimpact/pipeline.h"
#include "tagimpact/tagging.h"

#ifndef TAGIMPACT_DATA_DIR
#define TAGIMPACT_DATA_DIR "data"
#endif

namespace tagimpact {
namespace {

struct TaggerOptions {
  std::string kind = "lexicon";
  std::string command;
  std::string io_mode = "file";
  double timeout = 300;
  std::string lexicon;
  std::string rules;
};

struct GrammarOptions {
  bool np_participle_modifiers = false;
  std::string grammar_file;
};

void add_tagger_options(CLI::App *cmd, TaggerOptions &t) {
  cmd->add_option("--tagger", t.kind, "lexicon or external")
      ->check(CLI::IsMember({"lexicon", "external"}));
  cmd->add_option("--command", t.command,
                  "external tagger command; {in} and {out} name the files");
  cmd->add_option("--io-mode", t.io_mode, "external tagger I/O: file or stream")
      ->check(CLI::IsMember({"file", "stream"}));
  cmd->add_option("--timeout", t.timeout, "external tagger timeout in seconds");
  cmd->add_option("--lexicon", t.lexicon, "lexicon file")->check(CLI::ExistingFile);
  cmd->add_option("--rules", t.rules, "contextual rule file")
      ->check(CLI::ExistingFile);
}

void add_grammar_options(CLI::App *cmd, GrammarOptions &g) {
  cmd->add_flag("--np-participle-modifiers", g.np_participle_modifiers,
                "allow VBD/VBG/VBN as NP modifiers after a determiner");
  cmd->add_option("--grammar", g.grammar_file, "chunk grammar file")
      ->check(CLI::ExistingFile);
}

ChunkGrammar make_grammar(const GrammarOptions &g) {
  GrammarFlags flags;
  flags.np_participle_modifiers = g.np_participle_modifiers;
  if (g.grammar_file.empty()) return ChunkGrammar::canonical(flags);
  std::ifstream in = open_input(g.grammar_file);
  std::stringstream text;
  text << in.rdbuf();
  return ChunkGrammar::from_text(text.str(), flags);
}

TaggerFn make_tagger(const TaggerOptions &t) {
  if (t.kind == "external") {
    if (t.command.empty()) throw CLI::ValidationError("--command", "required with --tagger external");
    ExternalTaggerConfig config;
    config.command = t.command;
    config.io_mode = t.io_mode == "stream" ? ExternalTaggerConfig::IoMode::kLineStream
                                           : ExternalTaggerConfig::IoMode::kTempFile;
    config.timeout_seconds = t.timeout;
    config.validate();
    return [config](const std::vector<TokenizedSentence> &s) {
      return tag_via_external(s, config);
    };
  }
  std::string lexicon = t.lexicon.empty() ? default_data_dir() + "/lexicon.txt" : t.lexicon;
  std::string rules =
      t.rules.empty() ? default_data_dir() + "/contextual_rules.txt" : t.rules;
  auto tagger = std::make_shared<BaselineTagger>(Lexicon::load_file(lexicon),
                                                 load_rules_file(rules));
  return [tagger](const std::vector<TokenizedSentence> &s) { return tagger->tag_all(s); };
}

AbbreviationTable load_abbreviations(const std::string &path) {
  if (path.empty()) return {};
  std::ifstream in = open_input(path);
  return read_abbreviations(in);
}

std::vector<Document> load_raw(const std::string &path) {
  std::ifstream in = open_input(path);
  return read_raw_corpus(in);
}

std::vector<TaggedSentence> load_tagged(const std::string &path) {
  std::ifstream in = open_input(path);
  return read_tagged_corpus(in);
}

ConfusionMatrix load_confusion(const std::string &path) {
  std::ifstream in = open_input(path);
  return ConfusionMatrix::read_tsv(in);
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

}  // namespace

std::string default_data_dir() {
  if (const char *env = std::getenv("TAGIMPACT_DATA_DIR")) return env;
  return TAGIMPACT_DATA_DIR;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"POS tagging, chunking, extraction and tagging-error impact analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);

  std::string input, output, gold, pred, entities, confusion, abbreviations,
      verdicts_file, report_file;
  std::string mode = "directional";
  std::string from = "raw";
  TaggerOptions tagger;
  GrammarOptions grammar;
  double theta_group = 0.8, theta_sub = 0.8;
  bool paper_compat = false;
  bool case_sensitive = false;
  std::uint32_t trials = 100;
  std::uint64_t seed = 1;

  auto mode_option = [&](CLI::App *cmd) {
    cmd->add_option("--mode", mode, "directional or nondirectional")
        ->check(CLI::IsMember({"directional", "nondirectional"}));
  };

  CLI::App *tag = app.add_subcommand("tag", "raw corpus -> tagged corpus");
  tag->add_option("--input", input, "raw corpus (id<TAB>text)")
      ->required()->check(CLI::ExistingFile);
  tag->add_option("--output", output, "tagged corpus")->required();
  tag->add_option("--abbreviations", abbreviations, "short<TAB>long table")
      ->check(CLI::ExistingFile);
  add_tagger_options(tag, tagger);

  CLI::App *chunk = app.add_subcommand("chunk", "tagged corpus -> chunked corpus");
  chunk->add_option("--input", input, "tagged corpus")->required()->check(CLI::ExistingFile);
  chunk->add_option("--output", output, "chunked corpus")->required();
  add_grammar_options(chunk, grammar);

  CLI::App *extract = app.add_subcommand("extract", "corpus + entities -> relations TSV");
  extract->add_option("--input", input, "corpus")->required()->check(CLI::ExistingFile);
  extract->add_option("--from", from, "input format: raw, tagged or chunked")
      ->check(CLI::IsMember({"raw", "tagged", "chunked"}));
  extract->add_option("--entities", entities, "entity dictionary")
      ->required()->check(CLI::ExistingFile);
  extract->add_option("--output", output, "relations TSV")->required();
  extract->add_option("--abbreviations", abbreviations, "short<TAB>long table")
      ->check(CLI::ExistingFile);
  extract->add_flag("--case-sensitive", case_sensitive, "match entities case-sensitively");
  mode_option(extract);
  add_tagger_options(extract, tagger);
  add_grammar_options(extract, grammar);

  CLI::App *eval_tags = app.add_subcommand("eval-tags", "gold + predicted tags -> confusion TSV");
  eval_tags->add_option("--gold", gold, "gold tagged corpus")->required()->check(CLI::ExistingFile);
  eval_tags->add_option("--pred", pred, "predicted tagged corpus")
      ->required()->check(CLI::ExistingFile);
  eval_tags->add_option("--output", output, "confusion matrix TSV");

  CLI::App *impact = app.add_subcommand("impact", "confusion -> verdicts + functional accuracy");
  impact->add_option("--confusion,--input", confusion, "confusion matrix TSV")
      ->required()->check(CLI::ExistingFile);
  CLI::Option *theta_group_opt =
      impact->add_option("--theta-group", theta_group, "error-group coverage threshold");
  CLI::Option *theta_sub_opt =
      impact->add_option("--theta-sub", theta_sub, "subgroup coverage threshold");
  impact->add_flag("--paper-compat", paper_compat,
                   "binary verdicts, reference table and the six reference groups");
  impact->add_option("--verdicts", verdicts_file, "verdict TSV overriding the classifier")
      ->check(CLI::ExistingFile);
  impact->add_option("--output", output, "verdict TSV for the examined pairs");
  impact->add_option("--report", report_file, "text report");
  add_grammar_options(impact, grammar);

  CLI::App *eval_rel = app.add_subcommand("eval-relations", "predicted + gold relations -> P/R/F");
  eval_rel->add_option("--pred", pred, "predicted relations TSV")
      ->required()->check(CLI::ExistingFile);
  eval_rel->add_option("--gold", gold, "gold relations TSV")->required()->check(CLI::ExistingFile);
  eval_rel->add_option("--output", output, "report TSV");
  mode_option(eval_rel);

  CLI::App *perturb = app.add_subcommand("perturb", "gold corpus + confusion -> degradation report");
  perturb->add_option("--gold", gold, "gold tagged corpus")->required()->check(CLI::ExistingFile);
  perturb->add_option("--confusion", confusion, "confusion matrix TSV")
      ->required()->check(CLI::ExistingFile);
  perturb->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  perturb->add_option("--seed", seed, "random seed");
  perturb->add_option("--output", output, "degradation report TSV");
  add_grammar_options(perturb, grammar);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (jobs > 0) omp_set_num_threads(jobs);
  const bool directional = mode == "directional";

  try {
    if (tag->parsed()) {
      TaggerFn tag_fn = make_tagger(tagger);
      auto sentences = prepare_corpus(load_raw(input), load_abbreviations(abbreviations));
      std::vector<TaggedSentence> tagged;
      if (!sentences.empty()) tagged = tag_fn(sentences);
      write_atomically(output, [&](std::ostream &o) { write_tagged_corpus(tagged, o); });
      out << "tagged " << tagged.size() << " sentences\n";
    } else if (chunk->parsed()) {
      ChunkGrammar g = make_grammar(grammar);
      auto chunked = chunk_corpus(load_tagged(input), g);
      write_atomically(output, [&](std::ostream &o) { write_chunked_corpus(chunked, o); });
      out << "chunked " << chunked.size() << " sentences\n";
    } else if (extract->parsed()) {
      ChunkGrammar g = make_grammar(grammar);
      EntityDictionary dict = EntityDictionary::load_file(entities, case_sensitive);
      if (dict.empty()) throw FormatError("entity dictionary " + entities + " is empty");
      std::vector<DocRelation> relations;
      if (from == "raw") {
        relations = extract_relations(load_raw(input), make_tagger(tagger), g, dict,
                                      directional, load_abbreviations(abbreviations));
      } else if (from == "tagged") {
        relations = relations_from_chunked(chunk_corpus(load_tagged(input), g), dict,
                                           directional);
      } else {
        std::ifstream in = open_input(input);
        relations = relations_from_chunked(read_chunked_corpus(in), dict, directional);
      }
      write_atomically(output, [&](std::ostream &o) { write_relations_tsv(relations, o); });
      out << "extracted " << relations.size() << " relations\n";
    } else if (eval_tags->parsed()) {
      ConfusionMatrix m = build_confusion(load_tagged(gold), load_tagged(pred));
      if (!output.empty()) {
        write_atomically(output, [&](std::ostream &o) { m.write_tsv(o); });
      }
      out << "tokens   " << m.total() << '\n'
          << "correct  " << m.diagonal() << '\n'
          << "accuracy " << fixed(tagging_accuracy(m)) << '\n';
    } else if (impact->parsed()) {
      ConfusionMatrix m = load_confusion(confusion);
      ChunkGrammar g = make_grammar(grammar);
      auto groups = group_errors(m);
      std::vector<TagPair> examined;
      if (paper_compat && !theta_group_opt->count()) {
        examined = select_examined(groups, reference_examined_tags(),
                                   theta_sub_opt->count() ? theta_sub : 1.0);
      } else {
        examined = select_examined(groups, theta_group, theta_sub);
      }
      VerdictMap verdicts;
      for (const TagPair &p : examined) {
        verdicts[p] = classify_pair(p.first, p.second, g, paper_compat);
      }
      if (!verdicts_file.empty()) {
        std::ifstream in = open_input(verdicts_file);
        for (ReferenceVerdict &row : read_verdicts_tsv(in)) {
          auto it = verdicts.find({row.gold, row.assigned});
          if (it != verdicts.end()) it->second = {row.verdict, std::move(row.reason)};
        }
      }
      AccuracyReport acc = functional_accuracy(m, verdicts);
      if (!output.empty()) {
        std::vector<ReferenceVerdict> rows;
        for (const TagPair &p : examined) {
          const ImpactVerdict &v = verdicts.at(p);
          rows.push_back({p.first, p.second, v.verdict, v.reason});
        }
        write_atomically(output, [&](std::ostream &o) { write_verdicts_tsv(rows, o); });
      }
      if (!report_file.empty()) {
        write_atomically(report_file, [&](std::ostream &o) {
          write_impact_report(groups, examined, verdicts, acc, o);
        });
      }
      out << "tokens              " << acc.total_tokens << '\n'
          << "correct             " << acc.correct_tokens << '\n'
          << "examined pairs      " << examined.size() << '\n'
          << "examined errors     " << acc.examined_errors << '\n'
          << "nullified errors    " << acc.nullified_errors << '\n'
          << "tagging accuracy    " << fixed(acc.raw_accuracy) << '\n'
          << "functional accuracy " << fixed(acc.functional_accuracy) << '\n';
    } else if (eval_rel->parsed()) {
      std::ifstream pin = open_input(pred), gin = open_input(gold);
      EvalReport r = evaluate_relations(read_relations_tsv(pin, directional),
                                        read_relations_tsv(gin, directional), directional);
      if (!output.empty()) {
        write_atomically(output, [&](std::ostream &o) { write_report_tsv(r, o); });
      }
      write_report_text(r, out);
    } else if (perturb->parsed()) {
      ChunkGrammar g = make_grammar(grammar);
      DegradationReport r =
          perturb_corpus(load_tagged(gold), load_confusion(confusion), trials, seed, g);
      if (!output.empty()) {
        write_atomically(output, [&](std::ostream &o) { write_degradation_tsv(r, o); });
      }
      out << "trials                     " << r.trials.size() << '\n'
          << "changed sentence fraction  " << fixed(r.changed_sentence_fraction()) << '\n'
          << "changed triple fraction    " << fixed(r.changed_triple_fraction()) << '\n';
    }
  } catch (const CLI::ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TaggerError &e) {
    err << "tagger error: " << e.what() << '\n';
    return kExitTagger;
  } catch (const DataError &e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmptyMatrix &e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace tagimpact
