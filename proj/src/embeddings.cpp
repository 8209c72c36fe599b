#include "textmetrics/embeddings.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "textmetrics/errors.hpp"
#include "textmetrics/unicode.hpp"

namespace textmetrics {

void EmbeddingTable::insert(std::string word, std::vector<double> vector) {
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_ || dimension_ == 0) {
    throw std::invalid_argument("embedding for '" + word + "' has " + std::to_string(vector.size()) +
                                " components, table dimension is " + std::to_string(dimension_));
  }
  entries_.insert_or_assign(std::move(word), std::move(vector));
}

const std::vector<double>* EmbeddingTable::find(std::string_view word) const {
  if (auto it = entries_.find(std::string(word)); it != entries_.end()) return &it->second;
  if (auto it = entries_.find(unicode::lower(word)); it != entries_.end()) return &it->second;
  return nullptr;
}

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

EmbeddingTable load_embeddings(std::istream& in, std::string source) {
  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  std::size_t expected = 0;
  bool first_content = true;

  while (std::getline(in, line)) {
    ++line_no;
    const auto parts = fields(line);
    if (parts.empty()) continue;

    if (first_content) {
      first_content = false;
      if (parts.size() == 2) {
        const auto n = parse_count(parts[0]);
        const auto d = parse_count(parts[1]);
        if (n && d) {
          if (*d == 0) throw ParseError(source, line_no, "header declares dimension 0");
          expected = *d;
          continue;
        }
      }
    }

    const std::size_t dim = parts.size() - 1;
    if (dim == 0) throw ParseError(source, line_no, "entry '" + std::string(parts[0]) + "' has no components");
    if (expected == 0) expected = dim;
    if (dim != expected) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(expected) + " components, found " + std::to_string(dim));
    }
    std::vector<double> vec;
    vec.reserve(dim);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto v = parse_double(parts[i]);
      if (!v) throw ParseError(source, line_no, "component '" + std::string(parts[i]) + "' is not a finite number");
      vec.push_back(*v);
    }
    table.insert(std::string(parts[0]), std::move(vec));
  }
  if (in.bad()) throw IoError(source + ": read failure");
  return table;
}

}  // namespace textmetrics
