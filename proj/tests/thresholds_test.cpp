#include "textmetrics/thresholds.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "textmetrics/errors.hpp"

namespace textmetrics {
namespace {

ThresholdConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_threshold_config(in);
}

const std::string kRepetitive = "buy now\nbuy now\nbuy now\nbuy now\nreal content here";

TEST(ThresholdsTest, DuplicateLineBoundRejectsRepetition) {
  const ThresholdConfig cfg = parse("duplicate_line_fraction.max = 0.3\n");
  const QualityResult bad = apply_thresholds(quality(build_document("d", kRepetitive)), cfg);
  EXPECT_FALSE(bad.passed);
  ASSERT_EQ(bad.verdicts.size(), 1u);
  EXPECT_EQ(bad.verdicts[0], (std::pair<std::string, bool>{"duplicate_line_fraction", false}));

  const QualityResult good = apply_thresholds(quality(build_document("d", "one line\nanother line")), cfg);
  EXPECT_TRUE(good.passed);
}

TEST(ThresholdsTest, BoundsAreInclusive) {
  const ThresholdConfig cfg = parse("doc_length.min = 2\ndoc_length.max = 2\n");
  EXPECT_TRUE(apply_thresholds(quality(build_document("d", "two words")), cfg).passed);
  EXPECT_FALSE(apply_thresholds(quality(build_document("d", "three words now")), cfg).passed);
}

TEST(ThresholdsTest, NullValueFailsABound) {
  const ThresholdConfig cfg = parse("alpha_ratio.min = 0.5\n");
  EXPECT_FALSE(apply_thresholds(quality(build_document("d", "")), cfg).passed);
}

TEST(ThresholdsTest, ProbeRequirements) {
  const ThresholdConfig cfg = parse("forbid_contains = lorem ipsum\nrequire_contains = needle\n");
  EXPECT_EQ(cfg.settings.probes, (std::vector<std::string>{"lorem ipsum", "{", "needle"}));
  const QualityResult r = apply_thresholds(quality(build_document("d", "Lorem ipsum needle"), cfg.settings), cfg);
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.verdicts.size(), 2u);
  EXPECT_EQ(r.verdicts[0], (std::pair<std::string, bool>{"contains_lorem ipsum", false}));
  EXPECT_EQ(r.verdicts[1], (std::pair<std::string, bool>{"contains_needle", true}));
}

TEST(ThresholdsTest, ListSettingsReplaceDefaults) {
  const ThresholdConfig cfg = parse("symbols = @\nprobes = foo\nstop_words = A, the\n");
  EXPECT_EQ(cfg.settings.symbols, std::vector<std::string>{"@"});
  EXPECT_EQ(cfg.settings.probes, std::vector<std::string>{"foo"});
  EXPECT_EQ(cfg.settings.stop_words.size(), 2u);
  EXPECT_TRUE(cfg.settings.stop_words.contains("a"));
  EXPECT_NO_THROW(parse("symbols = @\nsymbol_to_word_ratio_@.max = 1\n"));
  EXPECT_THROW(parse("symbol_to_word_ratio_#.max = 1\nsymbols = @\n"), ConfigError);
}

TEST(ThresholdsTest, Errors) {
  EXPECT_THROW(parse("alpha_ratio.min = 0.9\nalpha_ratio.max = 0.1\n"), ConfigError);
  EXPECT_THROW(parse("no_such_metric.max = 1\n"), ConfigError);
  try {
    parse("# ok\n\nalpha_ratio.min = lots\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse("just words\n"), ParseError);
  EXPECT_THROW(parse("mystery = 1\n"), ParseError);
}

TEST(ThresholdsTest, VerdictsKeepConfigOrder) {
  const ThresholdConfig cfg = parse("doc_length.min = 1\nalpha_ratio.min = 0\ndoc_length.max = 5\n");
  const QualityResult r = apply_thresholds(quality(build_document("d", "hello")), cfg);
  ASSERT_EQ(r.verdicts.size(), 2u);
  EXPECT_EQ(r.verdicts[0].first, "doc_length");
  EXPECT_EQ(r.verdicts[1].first, "alpha_ratio");
}

TEST(ThresholdsTest, ShippedDefaultProfileLoads) {
  const ThresholdConfig cfg = load_threshold_config(TEXTMETRICS_DEFAULT_THRESHOLDS);
  EXPECT_GE(cfg.bounds.size(), 20u);
  const std::string clean =
      "The river runs through the old town and the children play near the water every summer. "
      "Their parents sit on the benches and talk about the weather, the harvest and the news from the city. "
      "In the evening the lights come on and the streets fill with people walking home after a long day.";
  EXPECT_TRUE(apply_thresholds(quality(build_document("d", clean), cfg.settings), cfg).passed);
  EXPECT_FALSE(apply_thresholds(quality(build_document("d", kRepetitive), cfg.settings), cfg).passed);
}

}  // namespace
}  // namespace textmetrics
