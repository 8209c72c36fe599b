#pragma once

#include <optional>
#include <vector>

#include "textmetrics/embeddings.hpp"
#include "textmetrics/text_model.hpp"

namespace textmetrics {

struct CoherenceScores {
  std::optional<double> first_order;
  std::optional<double> second_order;
};

/// Unweighted mean of the vectors of the sentence's in-vocabulary word
/// tokens; nullopt when none is in the table.
std::optional<std::vector<double>> sentence_embedding(const Document& doc, const Sentence& s,
                                                      const EmbeddingTable& table);

/// Cosine similarity, or nullopt if either vector has zero norm.
std::optional<double> cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

/// Sentences without an embedding are dropped before pairing. The n-th order
/// score is the mean cosine between embedded sentences n apart, skipping
/// pairs with a zero-norm operand; empty when no pair remains.
CoherenceScores coherence(const Document& doc, const EmbeddingTable& table);

}  // namespace textmetrics
