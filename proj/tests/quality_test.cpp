#include "textmetrics/quality.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "textmetrics/stop_words.hpp"
#include "textmetrics/unicode.hpp"

namespace textmetrics {
namespace {

std::vector<std::string> lowered_words(const Document& doc) {
  std::vector<std::string> out;
  for (const Token& t : doc.tokens()) {
    if (t.is_word) out.push_back(unicode::lower(t.text));
  }
  return out;
}

std::optional<double> symbol_ratio(const QualityValues& v, const std::string& symbol) {
  for (const auto& [s, r] : v.symbol_to_word_ratio) {
    if (s == symbol) return r;
  }
  ADD_FAILURE() << "missing symbol " << symbol;
  return std::nullopt;
}

TEST(QualityTest, StopListHasExpectedShape) {
  const auto words = english_stop_words();
  EXPECT_EQ(words.size(), 179u);
  EXPECT_NE(std::find(words.begin(), words.end(), "the"), words.end());
  EXPECT_EQ(QualitySettings{}.stop_words.size(), 179u);
}

TEST(QualityTest, HeuristicFixture) {
  const QualityValues v = heuristic_quality(build_document("d", "The cat sat on the mat. It was happy."));
  EXPECT_EQ(v.doc_length, 9u);
  EXPECT_EQ(v.n_stop_words, 5u);  // the, on, the, it, was
  EXPECT_DOUBLE_EQ(*v.alpha_ratio, 1.0);
  EXPECT_DOUBLE_EQ(*v.mean_word_length, 27.0 / 9.0);
  EXPECT_DOUBLE_EQ(*v.proportion_ellipsis_lines, 0.0);
  EXPECT_DOUBLE_EQ(*symbol_ratio(v, "#"), 0.0);
}

TEST(QualityTest, LineShapeAndSymbols) {
  const std::string text = "- one #tag\n* two...\n\nthree …\nfour 42";
  const QualityValues v = heuristic_quality(build_document("d", text));
  EXPECT_DOUBLE_EQ(*v.proportion_bullet_lines, 0.5);
  EXPECT_DOUBLE_EQ(*v.proportion_ellipsis_lines, 0.5);
  EXPECT_EQ(v.doc_length, 6u);
  EXPECT_DOUBLE_EQ(*symbol_ratio(v, "#"), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(*symbol_ratio(v, "..."), 2.0 / 6.0);
  EXPECT_DOUBLE_EQ(*v.alpha_ratio, 5.0 / 6.0);
}

TEST(QualityTest, ProbesAreCaseInsensitive) {
  const QualityValues v = heuristic_quality(build_document("d", "Lorem Ipsum dolor"));
  ASSERT_EQ(v.contains.size(), 2u);
  EXPECT_EQ(v.contains[0], (std::pair<std::string, bool>{"lorem ipsum", true}));
  EXPECT_EQ(v.contains[1], (std::pair<std::string, bool>{"{", false}));
}

TEST(QualityTest, EmptyDocument) {
  const QualityValues v = quality(build_document("d", ""));
  EXPECT_EQ(v.doc_length, 0u);
  EXPECT_FALSE(v.alpha_ratio);
  EXPECT_FALSE(v.mean_word_length);
  EXPECT_FALSE(v.proportion_bullet_lines);
  EXPECT_FALSE(v.duplicate_line_fraction);
  EXPECT_FALSE(v.duplicate_paragraph_chr_fraction);
  EXPECT_FALSE(symbol_ratio(v, "#"));
  for (double f : v.top_ngram_chr_fraction) EXPECT_EQ(f, 0.0);
  for (double f : v.duplicate_ngram_chr_fraction) EXPECT_EQ(f, 0.0);
}

TEST(QualityTest, DuplicateLinesAndParagraphs) {
  const std::string text = "same line\nsame line\nother\n\nsame line\nsame line\nother\n\nlast";
  const DuplicateFractions lines = duplicate_line_fractions(text);
  EXPECT_DOUBLE_EQ(*lines.fraction, 4.0 / 7.0);
  EXPECT_DOUBLE_EQ(*lines.chr_fraction, (3 * 9.0 + 5.0) / (4 * 9.0 + 2 * 5.0 + 4.0));
  const DuplicateFractions paras = duplicate_paragraph_fractions(text);
  EXPECT_DOUBLE_EQ(*paras.fraction, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(*paras.chr_fraction, 25.0 / (25.0 + 25.0 + 4.0));
}

TEST(QualityTest, TopAndDuplicateNgrams) {
  const Document doc = build_document("d", "a b a b a b c");
  // "a b" occurs 3 times: 6 of 7 characters.
  EXPECT_DOUBLE_EQ(top_ngram_chr_fraction(doc, 2), 6.0 / 7.0);
  EXPECT_DOUBLE_EQ(duplicate_ngram_chr_fraction(doc, 2), 6.0 / 7.0);
  EXPECT_DOUBLE_EQ(duplicate_ngram_chr_fraction(doc, 4), 6.0 / 7.0);
  EXPECT_DOUBLE_EQ(duplicate_ngram_chr_fraction(doc, 5), 0.0);
  EXPECT_DOUBLE_EQ(top_ngram_chr_fraction(build_document("d", "one"), 2), 0.0);
  // Overlapping occurrences can exceed the text; the value is capped.
  EXPECT_DOUBLE_EQ(top_ngram_chr_fraction(build_document("d", "x x x x"), 2), 1.0);
}

TEST(QualityTest, NgramsIgnoreCase) {
  EXPECT_DOUBLE_EQ(top_ngram_chr_fraction(build_document("d", "Big cat big CAT"), 2), 1.0);
}

TEST(QualityTest, FieldNamesMatchFields) {
  const QualitySettings settings;
  const MetricFields fields = quality_fields(quality(build_document("d", "Hello world."), settings));
  const std::vector<std::string> names = quality_field_names(settings);
  ASSERT_EQ(fields.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) EXPECT_EQ(fields[i].first, names[i]);
  EXPECT_NE(std::find(names.begin(), names.end(), "symbol_to_word_ratio_#"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "contains_lorem ipsum"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "top_ngram_chr_fraction_4"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "duplicate_ngram_chr_fraction_10"), names.end());
}

TEST(QualityTest, PropertyRepetitionMatchesOracles) {
  gen::Rng rng(555);
  const std::vector<std::string> vocab = {"a", "bb", "Ccc", "dé", "e"};
  for (int iter = 0; iter < 1000; ++iter) {
    const std::string text = gen::vocabulary_text(rng, vocab, 50, true);
    const Document doc = build_document("d", text);
    const auto words = lowered_words(doc);
    for (std::size_t n = kTopNgramMin; n <= kTopNgramMax; ++n) {
      ASSERT_EQ(top_ngram_chr_fraction(doc, n), oracle::top_ngram_chr_fraction(words, n)) << text;
    }
    for (std::size_t n = kDuplicateNgramMin; n <= kDuplicateNgramMax; ++n) {
      ASSERT_EQ(duplicate_ngram_chr_fraction(doc, n), oracle::duplicate_ngram_chr_fraction(words, n)) << text;
    }
    const auto lines = duplicate_line_fractions(text);
    const auto want_lines = oracle::duplicate_lines(text);
    ASSERT_EQ(lines.fraction, want_lines.fraction);
    ASSERT_EQ(lines.chr_fraction, want_lines.chr_fraction);
    const auto paras = duplicate_paragraph_fractions(text);
    const auto want_paras = oracle::duplicate_paragraphs(text);
    ASSERT_EQ(paras.fraction, want_paras.fraction);
    ASSERT_EQ(paras.chr_fraction, want_paras.chr_fraction);
  }
}

TEST(QualityTest, PropertyFractionsInUnitInterval) {
  gen::Rng rng(8080);
  for (int iter = 0; iter < 2000; ++iter) {
    const QualityValues v = quality(build_document("d", gen::utf8_text(rng, 120)));
    for (const auto& f : {v.alpha_ratio, v.proportion_ellipsis_lines, v.proportion_bullet_lines,
                          v.duplicate_line_fraction, v.duplicate_paragraph_fraction, v.duplicate_line_chr_fraction,
                          v.duplicate_paragraph_chr_fraction}) {
      if (f) {
        ASSERT_GE(*f, 0.0);
        ASSERT_LE(*f, 1.0);
      }
    }
    for (double f : v.top_ngram_chr_fraction) ASSERT_TRUE(f >= 0.0 && f <= 1.0);
    for (double f : v.duplicate_ngram_chr_fraction) ASSERT_TRUE(f >= 0.0 && f <= 1.0);
  }
}

}  // namespace
}  // namespace textmetrics
