#include "tagimpact/tagging.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tagimpact/errors.h"
#include "tagimpact/pipeline.h"

namespace tagimpact {
namespace {

TokenizedSentence toks(std::vector<std::string> t) { return {std::move(t), {}}; }

std::vector<PosTag> tags(const TaggedSentence &s) { return s.tags; }

Lexicon lexicon_of(const std::string &text) {
  std::istringstream in(text);
  return Lexicon::load(in);
}

std::vector<ContextualRule> rules_of(const std::string &text) {
  std::istringstream in(text);
  return load_rules(in);
}

TEST(Lexicon, DirectLookup) {
  auto lex = lexicon_of("the DT\nprotein NN\n");
  auto s = tag_with_lexicon(toks({"the", "protein"}), lex);
  EXPECT_EQ(tags(s), (std::vector<PosTag>{Tag::DT, Tag::NN}));
  EXPECT_EQ(s.words, (std::vector<std::string>{"the", "protein"}));
}

TEST(Lexicon, FirstTagWinsAndCommentsSkipped) {
  auto lex = lexicon_of("// header\n\nbinds VBZ NNS\n");
  ASSERT_NE(lex.find("binds"), nullptr);
  EXPECT_EQ(lex.find("binds")->front(), PosTag(Tag::VBZ));
  EXPECT_EQ(lex.size(), 1u);
}

TEST(Lexicon, Errors) {
  EXPECT_THROW(lexicon_of("word QQ\n"), UnknownTag);
  EXPECT_THROW(lexicon_of("word\n"), FormatError);
}

TEST(Lexicon, SentenceInitialLowercaseFallback) {
  auto lex = lexicon_of("the DT\n");
  EXPECT_EQ(tag_with_lexicon(toks({"The"}), lex).tags[0], PosTag(Tag::DT));
  EXPECT_EQ(tag_with_lexicon(toks({"x", "The"}), lex).tags[1], PosTag(Tag::NNP));
}

TEST(UnknownWords, Heuristics) {
  Lexicon empty;
  EXPECT_EQ(tag_with_lexicon(toks({"GerE"}), empty).tags[0], PosTag(Tag::NNP));
  EXPECT_EQ(tag_with_lexicon(toks({"42"}), empty).tags[0], PosTag(Tag::CD));
  EXPECT_EQ(guess_unknown("3.5", false), PosTag(Tag::CD));
  EXPECT_EQ(guess_unknown("Protein", true), PosTag(Tag::NN));
  EXPECT_EQ(guess_unknown("Protein", false), PosTag(Tag::NNP));
  EXPECT_EQ(guess_unknown("IL-2", true), PosTag(Tag::NNP));
  EXPECT_EQ(guess_unknown("cells", false), PosTag(Tag::NNS));
  EXPECT_EQ(guess_unknown("sigK", false), PosTag(Tag::NN));
}

TEST(ContextualRules, PrevTag) {
  auto rules = rules_of("NNS VBZ PREVTAG NNP\n");
  TaggedSentence s{{"GerE", "binds"}, {Tag::NNP, Tag::NNS}, {}};
  EXPECT_EQ(apply_contextual_rules(s, rules).tags[1], PosTag(Tag::VBZ));
}

TEST(ContextualRules, EmptyRuleListIsIdentity) {
  TaggedSentence s{{"a", "b"}, {Tag::DT, Tag::NN}, {}};
  EXPECT_EQ(apply_contextual_rules(s, {}), s);
}

TEST(ContextualRules, Templates) {
  TaggedSentence s{{"to", "form", "the", "complex", "."},
                   {Tag::TO, Tag::NN, Tag::DT, Tag::JJ, Tag::Period}, {}};
  EXPECT_EQ(apply_contextual_rules(s, rules_of("NN VB PREVTAG TO\n")).tags[1], PosTag(Tag::VB));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("JJ NN NEXTTAG .\n")).tags[3], PosTag(Tag::NN));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("JJ NN PREV2TAG NN\n")).tags[3], PosTag(Tag::NN));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("NN VB NEXT2TAG JJ\n")).tags[1], PosTag(Tag::VB));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("NN VB SURROUNDTAG TO DT\n")).tags[1],
            PosTag(Tag::VB));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("NN VB SURROUNDTAG TO NN\n")).tags[1],
            PosTag(Tag::NN));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("JJ NN CURWD complex\n")).tags[3], PosTag(Tag::NN));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("JJ NN SUFFIX lex\n")).tags[3], PosTag(Tag::NN));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("JJ NN PREVBIGRAM NN DT\n")).tags[3],
            PosTag(Tag::NN));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("NN VB NEXTBIGRAM DT JJ\n")).tags[1],
            PosTag(Tag::VB));
  EXPECT_EQ(apply_contextual_rules(s, rules_of("JJ NN CAP\n")).tags[3], PosTag(Tag::JJ));
}

TEST(ContextualRules, LaterRulesSeeEarlierRewrites) {
  TaggedSentence s{{"a", "b", "c"}, {Tag::DT, Tag::NN, Tag::NN}, {}};
  auto out = apply_contextual_rules(s, rules_of("NN JJ PREVTAG DT\nNN NNS PREVTAG JJ\n"));
  EXPECT_EQ(out.tags, (std::vector<PosTag>{Tag::DT, Tag::JJ, Tag::NNS}));
}

TEST(ContextualRules, MalformedLines) {
  EXPECT_THROW(rules_of("NN VB BOGUS TO\n"), FormatError);
  EXPECT_THROW(rules_of("NN VB PREVTAG\n"), FormatError);
  EXPECT_THROW(rules_of("NN XX PREVTAG TO\n"), UnknownTag);
}

TEST(BaselineTagger, PreservesTokensAndIsDeterministic) {
  auto lex = Lexicon::load_file(TAGIMPACT_TEST_DATA "/lexicon.txt");
  auto rules = load_rules_file(TAGIMPACT_TEST_DATA "/contextual_rules.txt");
  BaselineTagger tagger(lex, rules);
  std::ifstream in(TAGIMPACT_TEST_DATA "/sample/corpus.tsv");
  std::vector<Document> docs;
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    docs.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  auto sentences = prepare_corpus(docs);
  ASSERT_EQ(sentences.size(), 50u);
  auto tagged = tagger.tag_all(sentences);
  ASSERT_EQ(tagged.size(), sentences.size());
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    EXPECT_EQ(tagged[i].words, sentences[i].tokens);
    EXPECT_EQ(tagged[i].tags.size(), sentences[i].tokens.size());
    EXPECT_EQ(tagged[i].source, sentences[i].source);
    EXPECT_EQ(tagged[i], tagger.tag(sentences[i]));
  }
}

TEST(BaselineTagger, SampleSentence) {
  BaselineTagger tagger(Lexicon::load_file(TAGIMPACT_TEST_DATA "/lexicon.txt"),
                        load_rules_file(TAGIMPACT_TEST_DATA "/contextual_rules.txt"));
  auto s = tagger.tag(tokenize("GerE binds to the promoter of cotB."));
  EXPECT_EQ(s.tags, (std::vector<PosTag>{Tag::NNP, Tag::VBZ, Tag::TO, Tag::DT, Tag::NN,
                                         Tag::IN, Tag::NN, Tag::Period}));
}

}  // namespace
}  // namespace tagimpact
