#include "textmetrics/syntactic.hpp"

#include <cstdlib>
#include <vector>

#include "textmetrics/descriptive_stats.hpp"
#include "textmetrics/errors.hpp"

namespace textmetrics {

namespace {

void require_syntax(const Document& doc) {
  if (!doc.has_syntax()) {
    throw SyntaxRequiredError("document '" + doc.id() + "' has no dependency annotation");
  }
}

SentenceDependencyStats sentence_stats_unchecked(const Document& doc, const Sentence& s) {
  const auto tokens = doc.sentence_tokens(s);
  if (tokens.empty()) return {};
  long long total = 0;
  std::size_t adjacent = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const int head = *tokens[i].head;
    if (head == 0) continue;
    const long long distance = std::llabs(static_cast<long long>(i + 1) - head);
    total += distance;
    if (distance == 1) ++adjacent;
  }
  const double n = static_cast<double>(tokens.size());
  return {static_cast<double>(total) / n, static_cast<double>(adjacent) / n};
}

}  // namespace

SentenceDependencyStats sentence_dependency_stats(const Document& doc, const Sentence& s) {
  require_syntax(doc);
  return sentence_stats_unchecked(doc, s);
}

DocumentDependencyStats document_dependency_stats(const Document& doc) {
  require_syntax(doc);
  std::vector<double> distances;
  std::vector<double> adjacency;
  for (const Sentence& s : doc.sentences()) {
    const SentenceDependencyStats st = sentence_stats_unchecked(doc, s);
    distances.push_back(st.mean_distance);
    adjacency.push_back(st.prop_adjacent);
  }

  DocumentDependencyStats out;
  if (const auto d = summarize(distances)) {
    out.dependency_distance_mean = d->mean;
    out.dependency_distance_std = d->std_dev;
  }
  if (const auto a = summarize(adjacency)) {
    out.prop_adjacent_mean = a->mean;
    out.prop_adjacent_std = a->std_dev;
  }
  return out;
}

PosProportions pos_proportions(const Document& doc) {
  PosProportions counts;
  for (const Token& t : doc.tokens()) {
    if (!t.upos) throw SyntaxRequiredError("document '" + doc.id() + "' has tokens without a UPOS tag");
    counts[*t.upos] += 1.0;
  }
  const double n = static_cast<double>(doc.tokens().size());
  for (auto& [tag, value] : counts) value /= n;
  return counts;
}

}  // namespace textmetrics
