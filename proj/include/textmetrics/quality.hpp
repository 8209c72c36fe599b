#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "textmetrics/metric_value.hpp"
#include "textmetrics/text_model.hpp"

namespace textmetrics {

/// Resources for the heuristic signals. Defaults: the built-in English stop
/// list, symbols "#" and "..." (which also counts "…"), probes "lorem ipsum"
/// and "{".
struct QualitySettings {
  std::unordered_set<std::string> stop_words = default_stop_words();
  std::vector<std::string> symbols = {"#", "..."};
  std::vector<std::string> probes = {"lorem ipsum", "{"};

  static std::unordered_set<std::string> default_stop_words();
};

inline constexpr std::size_t kTopNgramMin = 2;
inline constexpr std::size_t kTopNgramMax = 4;
inline constexpr std::size_t kDuplicateNgramMin = 5;
inline constexpr std::size_t kDuplicateNgramMax = 10;

struct QualityValues {
  std::size_t n_stop_words = 0;
  std::optional<double> alpha_ratio;
  std::optional<double> mean_word_length;
  std::size_t doc_length = 0;
  std::optional<double> proportion_ellipsis_lines;
  std::optional<double> proportion_bullet_lines;
  std::vector<std::pair<std::string, std::optional<double>>> symbol_to_word_ratio;
  std::vector<std::pair<std::string, bool>> contains;

  std::optional<double> duplicate_line_fraction;
  std::optional<double> duplicate_paragraph_fraction;
  std::optional<double> duplicate_line_chr_fraction;
  std::optional<double> duplicate_paragraph_chr_fraction;
  std::array<double, kTopNgramMax - kTopNgramMin + 1> top_ngram_chr_fraction{};
  std::array<double, kDuplicateNgramMax - kDuplicateNgramMin + 1> duplicate_ngram_chr_fraction{};
};

struct DuplicateFractions {
  std::optional<double> fraction;
  std::optional<double> chr_fraction;
};

/// Stop words, alphabetic ratio, word length, line shape, symbol ratios and
/// probe strings. Leaves the repetition fields untouched.
QualityValues heuristic_quality(const Document& doc, const QualitySettings& settings = {});

/// A line (split on '\n', trailing whitespace trimmed, empty lines ignored)
/// is a duplicate when an earlier line has the same text.
DuplicateFractions duplicate_line_fractions(std::string_view text);

/// Same as duplicate_line_fractions over paragraphs: maximal runs of
/// non-blank lines, i.e. text separated by one or more blank lines.
DuplicateFractions duplicate_paragraph_fractions(std::string_view text);

/// Share of word-token characters taken by all occurrences of the most
/// frequent lowercased n-gram (earliest first occurrence wins ties), capped
/// at 1. Zero with fewer than n words.
double top_ngram_chr_fraction(const Document& doc, std::size_t n);

/// Share of word-token characters at positions covered by any lowercased
/// n-gram that occurs at least twice (overlaps allowed). Zero with fewer than
/// n words.
double duplicate_ngram_chr_fraction(const Document& doc, std::size_t n);

/// Every quality signal.
QualityValues quality(const Document& doc, const QualitySettings& settings = {});

/// Flat record fields, e.g. symbol_to_word_ratio_#, contains_lorem ipsum,
/// top_ngram_chr_fraction_2.
MetricFields quality_fields(const QualityValues& values);

/// Field names quality_fields produces for these settings, in order.
std::vector<std::string> quality_field_names(const QualitySettings& settings);

}  // namespace textmetrics
