#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "textmetrics/text_model.hpp"

namespace textmetrics {

/// A parsed JSONL document plus the exact input line it came from.
struct JsonlDocument {
  Document doc;
  std::string raw;
};

/// One JSON object per line with a string "text" and an optional "id"
/// (string or number; defaults to the 1-based line number). Blank lines are
/// skipped. A malformed line throws ParseError, or is skipped and counted
/// when `lenient` is set.
class JsonlReader {
 public:
  JsonlReader(std::istream& in, std::string lang = "en", bool lenient = false, std::string source = "jsonl");

  std::optional<JsonlDocument> next();
  std::size_t skipped() const noexcept { return skipped_; }

 private:
  std::istream& in_;
  std::string lang_;
  bool lenient_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::size_t skipped_ = 0;
};

std::vector<Document> read_jsonl(std::istream& in, std::string lang = "en", bool lenient = false,
                                 std::size_t* skipped = nullptr);

}  // namespace textmetrics
