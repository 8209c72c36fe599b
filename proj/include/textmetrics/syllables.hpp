#pragma once

#include <string>
#include <string_view>

namespace textmetrics {

/// Vowel-group syllable heuristic. Only English rules ship; other languages
/// fall back to them.
struct SyllableRules {
  std::u32string vowels = U"aeiouy";
  bool silent_e = true;
  bool le_exception = true;

  static SyllableRules english() { return {}; }
  static SyllableRules for_language(std::string_view lang);
};

/// Number of maximal vowel groups, minus one for a silent trailing "e" after
/// a consonant (only when at least two groups were counted, and not for a
/// consonant + "le" ending), clamped to >= 1. Case-insensitive.
///
/// Throws std::domain_error if the word has no alphabetic character.
int count_syllables(std::string_view word, const SyllableRules& rules = SyllableRules::english());

/// count_syllables for word tokens in general: a token without letters
/// (a number, say) counts as one syllable instead of throwing.
int token_syllables(std::string_view token, const SyllableRules& rules = SyllableRules::english());

}  // namespace textmetrics
