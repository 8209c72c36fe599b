#include "textmetrics/records.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

#include "textmetrics/errors.hpp"

namespace textmetrics {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  if (ec != std::errc()) {
    // Magnitudes beyond the buffer; metrics never get there.
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
  }
  std::string s(buf, ptr);
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string csv_cell(const MetricValue& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_number(d); }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::ordered_json json_value(const MetricValue& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(double d) const { return d; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

RecordWriter::RecordWriter(std::ostream& out, OutputFormat format, std::vector<std::string> keys)
    : out_(out), format_(format), keys_(std::move(keys)) {
  if (format_ == OutputFormat::csv) {
    std::string header = "id";
    for (const std::string& k : keys_) {
      header += ',';
      header += csv_escape(k);
    }
    header += '\n';
    out_ << header;
    if (!out_) throw IoError("failed to write output");
  }
}

void RecordWriter::write(const MetricsRecord& record) {
  if (record.values.size() != keys_.size()) {
    throw std::invalid_argument("record '" + record.id + "' does not match the output schema");
  }
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (record.values[i].first != keys_[i]) {
      throw std::invalid_argument("record '" + record.id + "' has key '" + record.values[i].first +
                                  "' where the schema expects '" + keys_[i] + "'");
    }
  }

  std::string line;
  if (format_ == OutputFormat::csv) {
    line = csv_escape(record.id);
    for (const auto& [key, value] : record.values) {
      line += ',';
      line += csv_escape(csv_cell(value));
    }
  } else {
    nlohmann::ordered_json obj;
    obj["id"] = record.id;
    for (const auto& [key, value] : record.values) obj[key] = json_value(value);
    line = obj.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
  }
  line += '\n';
  out_ << line;
  if (!out_) throw IoError("failed to write output");
}

void RecordWriter::flush() {
  out_.flush();
  if (!out_) throw IoError("failed to flush output");
}

void write_records(std::span<const MetricsRecord> records, std::span<const std::string> keys, OutputFormat format,
                   std::ostream& out) {
  RecordWriter writer(out, format, std::vector<std::string>(keys.begin(), keys.end()));
  for (const MetricsRecord& r : records) writer.write(r);
  writer.flush();
}

}  // namespace textmetrics
