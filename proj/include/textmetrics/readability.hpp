#pragma once

#include <cstddef>
#include <optional>

#include "textmetrics/syllables.hpp"
#include "textmetrics/text_model.hpp"

namespace textmetrics {

/// Document-level aggregates shared by the readability indices. Counted over
/// word tokens; characters are alphanumeric code points only.
struct ReadabilityCounts {
  std::size_t n_words = 0;
  std::size_t n_sentences = 0;
  std::size_t n_characters = 0;
  std::size_t n_syllables = 0;
  std::size_t n_hard_words = 0;  // >= 3 syllables
  std::size_t n_long_words = 0;  // > 6 alphanumeric characters
};

/// All fields are empty when the document has no words or no sentences.
///
/// SMOG is reported for any sentence count, although the formula was
/// calibrated on samples of 30 sentences; short texts give rough values.
struct ReadabilityScores {
  std::optional<double> gunning_fog;
  std::optional<double> smog;
  std::optional<double> flesch_reading_ease;
  std::optional<double> flesch_kincaid_grade;
  std::optional<double> automated_readability_index;
  std::optional<double> coleman_liau_index;
  std::optional<double> lix;
  std::optional<double> rix;
};

ReadabilityCounts readability_counts(const Document& doc, const SyllableRules& rules = SyllableRules::english());

ReadabilityScores compute_readability(const ReadabilityCounts& c);

inline ReadabilityScores readability(const Document& doc, const SyllableRules& rules = SyllableRules::english()) {
  return compute_readability(readability_counts(doc, rules));
}

}  // namespace textmetrics
