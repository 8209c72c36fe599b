#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "textmetrics/text_model.hpp"

namespace textmetrics {

/// The 17 Universal Dependencies part-of-speech tags, alphabetical.
inline constexpr std::array<std::string_view, 17> kUposTags = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

struct SentenceDependencyStats {
  double mean_distance = 0.0;
  double prop_adjacent = 0.0;
};

struct DocumentDependencyStats {
  std::optional<double> dependency_distance_mean;
  std::optional<double> dependency_distance_std;
  std::optional<double> prop_adjacent_mean;
  std::optional<double> prop_adjacent_std;
};

/// Tag -> share of all tokens. Tags that do not occur are absent.
using PosProportions = std::map<std::string, double, std::less<>>;

// Dependency distance is |position - head| for every token in the sentence,
// with the root contributing 0 to the mean. Punctuation is included since UD
// attaches it like any other token.

/// Throws SyntaxRequiredError unless doc.has_syntax().
SentenceDependencyStats sentence_dependency_stats(const Document& doc, const Sentence& s);

/// Mean and population std over sentences. Throws SyntaxRequiredError unless
/// doc.has_syntax().
DocumentDependencyStats document_dependency_stats(const Document& doc);

/// Throws SyntaxRequiredError if any token lacks a UPOS tag.
PosProportions pos_proportions(const Document& doc);

}  // namespace textmetrics
