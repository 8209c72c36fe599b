#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "textmetrics/quality.hpp"

namespace textmetrics {

struct Bounds {
  std::optional<double> min;
  std::optional<double> max;
};

/// Quality filter configuration. Bounds and probe requirements keep the
/// order in which they were first configured; verdicts follow that order.
struct ThresholdConfig {
  std::vector<std::pair<std::string, Bounds>> bounds;
  /// Probe -> whether the document must contain it.
  std::vector<std::pair<std::string, bool>> required_contains;
  QualitySettings settings;

  /// Throws ConfigError for min > max, unknown metric names, or a probe
  /// requirement for a probe missing from settings.probes.
  void validate() const;

  Bounds& bounds_for(const std::string& metric);
};

/// Parses the key-value threshold format:
///
///   # comment
///   alpha_ratio.min = 0.7
///   duplicate_line_fraction.max = 0.3
///   forbid_contains = lorem ipsum        (comma-separated probe list)
///   require_contains = ...
///   probes = lorem ipsum, {              (replaces the default probes)
///   symbols = #, ...                     (replaces the default symbols)
///   stop_words = a, an, the              (replaces the built-in list)
///
/// Probes named by require_/forbid_contains are added to the probe list.
/// Throws ParseError for malformed lines and ConfigError (via validate) for
/// inconsistent settings.
ThresholdConfig parse_threshold_config(std::istream& in, std::string source = "thresholds");
ThresholdConfig load_threshold_config(const std::filesystem::path& path);

struct QualityResult {
  QualityValues values;
  std::vector<std::pair<std::string, bool>> verdicts;  // metric name -> passed
  bool passed = true;
};

/// A bounded metric passes iff its value lies in [min, max]; a null value
/// fails. A probe passes iff its presence equals the requirement. Verdict
/// names match record field names (contains_<probe> for probes).
QualityResult apply_thresholds(const QualityValues& values, const ThresholdConfig& cfg);

}  // namespace textmetrics
