#include "textmetrics/syllables.hpp"

#include <stdexcept>
#include <vector>

#include "textmetrics/unicode.hpp"

namespace textmetrics {

SyllableRules SyllableRules::for_language(std::string_view /*lang*/) { return english(); }

namespace {

// Returns -1 when the word has no letters.
int count_or_negative(std::string_view word, const SyllableRules& rules) {
  std::vector<char32_t> cps;
  cps.reserve(word.size());
  bool any_letter = false;
  for (std::size_t pos = 0; pos < word.size();) {
    const unicode::Decoded d = unicode::decode(word, pos);
    any_letter = any_letter || unicode::is_alpha(d.cp);
    cps.push_back(unicode::to_lower(d.cp));
    pos += d.length;
  }
  if (!any_letter) return -1;

  const auto is_vowel = [&](char32_t c) { return rules.vowels.find(c) != std::u32string::npos; };
  const auto is_consonant = [&](char32_t c) { return unicode::is_alpha(c) && !is_vowel(c); };

  int groups = 0;
  bool in_group = false;
  for (char32_t c : cps) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }

  const std::size_t n = cps.size();
  if (rules.silent_e && groups >= 2 && n >= 2 && cps[n - 1] == U'e' && is_consonant(cps[n - 2])) {
    const bool consonant_le = rules.le_exception && n >= 3 && cps[n - 2] == U'l' && is_consonant(cps[n - 3]);
    if (!consonant_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

}  // namespace

int count_syllables(std::string_view word, const SyllableRules& rules) {
  const int n = count_or_negative(word, rules);
  if (n < 0) throw std::domain_error("count_syllables: '" + std::string(word) + "' has no alphabetic character");
  return n;
}

int token_syllables(std::string_view token, const SyllableRules& rules) {
  const int n = count_or_negative(token, rules);
  return n < 0 ? 1 : n;
}

}  // namespace textmetrics
