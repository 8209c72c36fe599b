#include "textmetrics/coherence.hpp"

#include <algorithm>
#include <cmath>

namespace textmetrics {

std::optional<std::vector<double>> sentence_embedding(const Document& doc, const Sentence& s,
                                                      const EmbeddingTable& table) {
  std::vector<double> sum(table.dimension(), 0.0);
  std::size_t found = 0;
  for (const Token& t : doc.sentence_tokens(s)) {
    if (!t.is_word) continue;
    const std::vector<double>* v = table.find(t.text);
    if (v == nullptr) continue;
    ++found;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
  }
  if (found == 0) return std::nullopt;
  for (double& x : sum) x /= static_cast<double>(found);
  return sum;
}

std::optional<double> cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return std::nullopt;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

namespace {

std::optional<double> order_coherence(const std::vector<std::vector<double>>& embeddings, std::size_t order) {
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i + order < embeddings.size(); ++i) {
    if (const auto c = cosine_similarity(embeddings[i], embeddings[i + order])) {
      sum += *c;
      ++pairs;
    }
  }
  if (pairs == 0) return std::nullopt;
  return sum / static_cast<double>(pairs);
}

}  // namespace

CoherenceScores coherence(const Document& doc, const EmbeddingTable& table) {
  std::vector<std::vector<double>> embeddings;
  for (const Sentence& s : doc.sentences()) {
    if (auto e = sentence_embedding(doc, s, table)) embeddings.push_back(std::move(*e));
  }
  return {order_coherence(embeddings, 1), order_coherence(embeddings, 2)};
}

}  // namespace textmetrics
