#include "textmetrics/readability.hpp"

#include <cmath>

#include "textmetrics/unicode.hpp"

namespace textmetrics {

ReadabilityCounts readability_counts(const Document& doc, const SyllableRules& rules) {
  ReadabilityCounts c;
  c.n_sentences = doc.sentences().size();
  for (const Token& t : doc.tokens()) {
    if (!t.is_word) continue;
    ++c.n_words;
    const std::size_t chars = unicode::count_alnum(t.text);
    const int syllables = token_syllables(t.text, rules);
    c.n_characters += chars;
    c.n_syllables += static_cast<std::size_t>(syllables);
    if (syllables >= 3) ++c.n_hard_words;
    if (chars > 6) ++c.n_long_words;
  }
  return c;
}

ReadabilityScores compute_readability(const ReadabilityCounts& c) {
  ReadabilityScores r;
  if (c.n_words == 0 || c.n_sentences == 0) return r;

  const double words = static_cast<double>(c.n_words);
  const double sentences = static_cast<double>(c.n_sentences);
  const double chars = static_cast<double>(c.n_characters);
  const double syllables = static_cast<double>(c.n_syllables);
  const double hard = static_cast<double>(c.n_hard_words);
  const double long_words = static_cast<double>(c.n_long_words);

  const double words_per_sentence = words / sentences;
  const double syllables_per_word = syllables / words;

  r.gunning_fog = 0.4 * (words_per_sentence + 100.0 * hard / words);
  r.smog = 1.043 * std::sqrt(hard * 30.0 / sentences) + 3.1291;
  r.flesch_reading_ease = 206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word;
  r.flesch_kincaid_grade = 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
  r.automated_readability_index = 4.71 * (chars / words) + 0.5 * words_per_sentence - 21.43;
  r.coleman_liau_index = 0.0588 * (100.0 * chars / words) - 0.296 * (100.0 * sentences / words) - 15.8;
  r.lix = words_per_sentence + 100.0 * long_words / words;
  r.rix = long_words / sentences;
  return r;
}

}  // namespace textmetrics
