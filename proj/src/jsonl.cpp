#include "textmetrics/jsonl.hpp"

#include <json.hpp>

#include "textmetrics/errors.hpp"

namespace textmetrics {

JsonlReader::JsonlReader(std::istream& in, std::string lang, bool lenient, std::string source)
    : in_(in), lang_(std::move(lang)), lenient_(lenient), source_(std::move(source)) {}

std::optional<JsonlDocument> JsonlReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::string problem;
    try {
      const nlohmann::json obj = nlohmann::json::parse(line);
      if (!obj.is_object()) {
        problem = "expected a JSON object";
      } else if (!obj.contains("text") || !obj["text"].is_string()) {
        problem = "missing string field \"text\"";
      } else {
        std::string id = std::to_string(line_no_);
        if (const auto it = obj.find("id"); it != obj.end() && !it->is_null()) {
          id = it->is_string() ? it->get<std::string>() : it->dump();
        }
        Document doc = build_document(std::move(id), obj["text"].get<std::string>(), lang_);
        return JsonlDocument{std::move(doc), std::move(line)};
      }
    } catch (const nlohmann::json::exception& e) {
      problem = e.what();
    }
    if (!lenient_) throw ParseError(source_, line_no_, problem);
    ++skipped_;
  }
  if (in_.bad()) throw IoError(source_ + ": read failure");
  return std::nullopt;
}

std::vector<Document> read_jsonl(std::istream& in, std::string lang, bool lenient, std::size_t* skipped) {
  JsonlReader reader(in, std::move(lang), lenient);
  std::vector<Document> docs;
  while (auto d = reader.next()) docs.push_back(std::move(d->doc));
  if (skipped != nullptr) *skipped = reader.skipped();
  return docs;
}

}  // namespace textmetrics
