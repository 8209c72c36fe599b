#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textmetrics/metric_value.hpp"

namespace textmetrics {

/// One output row: the document id plus metrics in schema order.
struct MetricsRecord {
  std::string id;
  MetricFields values;
  /// Per-document notes, e.g. metrics left null for lack of annotation.
  std::vector<std::string> warnings;
};

enum class OutputFormat { csv, jsonl };

OutputFormat parse_output_format(std::string_view name);

/// Locale-independent rendering: fixed notation, at most six fractional
/// digits, trailing zeros dropped ("108.2675", "2", "-0.723889").
std::string format_number(double v);

/// Streams records with a fixed key schema. CSV gets its header row on
/// construction (so an empty run still yields a header), RFC 4180 quoting,
/// '\n' line ends and empty cells for null. JSONL writes one object per
/// record with "id" first, null as JSON null and shortest round-trip floats.
/// Throws IoError when the sink fails.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format, std::vector<std::string> keys);

  void write(const MetricsRecord& record);
  void flush();

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> keys_;
};

void write_records(std::span<const MetricsRecord> records, std::span<const std::string> keys, OutputFormat format,
                   std::ostream& out);

std::string csv_escape(std::string_view field);

}  // namespace textmetrics
