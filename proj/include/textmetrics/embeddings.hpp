#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace textmetrics {

/// Word form -> fixed-dimension vector. Lookup tries the exact form first,
/// then its lowercase form.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dimension) : dimension_(dimension) {}

  /// Replaces an existing entry. The first insertion into a table without a
  /// dimension fixes it. Throws std::invalid_argument on a mismatch.
  void insert(std::string word, std::vector<double> vector);

  const std::vector<double>* find(std::string_view word) const;

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> entries_;
};

/// Reads the word2vec/GloVe text format: "word v1 ... vD" per line, with an
/// optional "N D" header line. Blank lines are ignored. Throws ParseError on
/// a dimension mismatch or a non-numeric component.
EmbeddingTable load_embeddings(std::istream& in, std::string source = "embeddings");

}  // namespace textmetrics
