#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "textmetrics/syllables.hpp"
#include "textmetrics/text_model.hpp"

namespace textmetrics {

/// Mean, median (mean of the two middle values for even sizes) and
/// population standard deviation.
struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  double std_dev = 0.0;
};

/// nullopt for an empty sample.
std::optional<SummaryStats> summarize(std::span<const double> values);

/// Counts and distributions over word tokens (punctuation excluded).
/// Uniqueness is case-insensitive; n_characters counts code points of word
/// tokens only.
struct DescriptiveStats {
  std::size_t n_tokens = 0;
  std::size_t n_unique_tokens = 0;
  std::size_t n_characters = 0;
  std::optional<double> proportion_unique_tokens;
  std::optional<SummaryStats> token_length;
  std::optional<SummaryStats> sentence_length;
  std::optional<SummaryStats> syllables_per_token;
};

DescriptiveStats descriptive_stats(const Document& doc,
                                   const SyllableRules& rules = SyllableRules::english());

}  // namespace textmetrics
