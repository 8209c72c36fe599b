#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace textmetrics {

/// A single metric cell: null, boolean, integer count or real value.
using MetricValue = std::variant<std::monostate, bool, std::int64_t, double>;

/// Ordered metric name -> value pairs.
using MetricFields = std::vector<std::pair<std::string, MetricValue>>;

inline MetricValue to_metric(std::optional<double> v) {
  if (!v) return std::monostate{};
  return *v;
}

inline MetricValue to_metric(std::size_t v) { return static_cast<std::int64_t>(v); }

inline bool is_null(const MetricValue& v) { return std::holds_alternative<std::monostate>(v); }

/// Numeric view used for threshold checks; null and booleans give nullopt.
inline std::optional<double> as_number(const MetricValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::nullopt;
}

}  // namespace textmetrics
