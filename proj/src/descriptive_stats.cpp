#include "textmetrics/descriptive_stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "textmetrics/unicode.hpp"

namespace textmetrics {

std::optional<SummaryStats> summarize(std::span<const double> values) {
  if (values.empty()) return std::nullopt;

  // Welford for mean/variance, selection for the median.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  for (double x : values) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  std::vector<double> scratch(values.begin(), values.end());
  const std::size_t mid = n / 2;
  std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(mid), scratch.end());
  double median = scratch[mid];
  if (n % 2 == 0) {
    const double lower = *std::max_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(mid));
    median = (lower + median) / 2.0;
  }

  return SummaryStats{mean, median, std::sqrt(std::max(0.0, m2 / static_cast<double>(n)))};
}

DescriptiveStats descriptive_stats(const Document& doc, const SyllableRules& rules) {
  DescriptiveStats out;
  std::unordered_set<std::string> types;
  std::vector<double> lengths;
  std::vector<double> syllables;
  std::vector<double> sentence_lengths;

  for (const Sentence& s : doc.sentences()) {
    std::size_t words = 0;
    for (const Token& t : doc.sentence_tokens(s)) {
      if (!t.is_word) continue;
      ++words;
      const std::size_t len = unicode::length(t.text);
      out.n_characters += len;
      lengths.push_back(static_cast<double>(len));
      syllables.push_back(static_cast<double>(token_syllables(t.text, rules)));
      types.insert(unicode::lower(t.text));
    }
    sentence_lengths.push_back(static_cast<double>(words));
  }

  out.n_tokens = lengths.size();
  out.n_unique_tokens = types.size();
  if (out.n_tokens > 0) {
    out.proportion_unique_tokens = static_cast<double>(out.n_unique_tokens) / static_cast<double>(out.n_tokens);
  }
  out.token_length = summarize(lengths);
  out.sentence_length = summarize(sentence_lengths);
  out.syllables_per_token = summarize(syllables);
  return out;
}

}  // namespace textmetrics
