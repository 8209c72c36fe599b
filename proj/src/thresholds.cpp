#include "textmetrics/thresholds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_map>

#include "textmetrics/errors.hpp"
#include "textmetrics/unicode.hpp"

namespace textmetrics {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> parse_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto comma = value.find(',', start);
    if (comma == std::string_view::npos) comma = value.size();
    const std::string_view item = trim(value.substr(start, comma - start));
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

void set_requirement(ThresholdConfig& cfg, const std::string& probe, bool required) {
  for (auto& [name, value] : cfg.required_contains) {
    if (name == probe) {
      value = required;
      return;
    }
  }
  cfg.required_contains.emplace_back(probe, required);
}

std::string format_bound(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

Bounds& ThresholdConfig::bounds_for(const std::string& metric) {
  for (auto& [name, b] : bounds) {
    if (name == metric) return b;
  }
  return bounds.emplace_back(metric, Bounds{}).second;
}

void ThresholdConfig::validate() const {
  std::vector<std::string> numeric;
  for (std::string& name : quality_field_names(settings)) {
    if (!name.starts_with("contains_")) numeric.push_back(std::move(name));
  }
  for (const auto& [name, b] : bounds) {
    if (std::find(numeric.begin(), numeric.end(), name) == numeric.end()) {
      throw ConfigError("unknown quality metric '" + name + "'");
    }
    if (b.min && b.max && *b.min > *b.max) {
      throw ConfigError("metric '" + name + "' has min " + format_bound(*b.min) + " > max " + format_bound(*b.max));
    }
  }
  for (const auto& [probe, required] : required_contains) {
    if (std::find(settings.probes.begin(), settings.probes.end(), probe) == settings.probes.end()) {
      throw ConfigError("probe '" + probe + "' has a requirement but is not in the probe list");
    }
  }
}

ThresholdConfig parse_threshold_config(std::istream& in, std::string source) {
  ThresholdConfig cfg;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key.ends_with(".min") || key.ends_with(".max")) {
      const auto number = parse_number(value);
      if (!number) throw ParseError(source, line_no, "'" + std::string(value) + "' is not a number");
      Bounds& b = cfg.bounds_for(key.substr(0, key.size() - 4));
      (key.ends_with(".min") ? b.min : b.max) = *number;
    } else if (key == "probes") {
      cfg.settings.probes = parse_list(value);
    } else if (key == "symbols") {
      cfg.settings.symbols = parse_list(value);
    } else if (key == "stop_words") {
      cfg.settings.stop_words.clear();
      for (const std::string& w : parse_list(value)) cfg.settings.stop_words.insert(unicode::lower(w));
    } else if (key == "require_contains" || key == "forbid_contains") {
      for (const std::string& probe : parse_list(value)) set_requirement(cfg, probe, key == "require_contains");
    } else {
      throw ParseError(source, line_no, "unknown key '" + key + "'");
    }
  }
  if (in.bad()) throw IoError(source + ": read failure");

  for (const auto& [probe, required] : cfg.required_contains) {
    auto& probes = cfg.settings.probes;
    if (std::find(probes.begin(), probes.end(), probe) == probes.end()) probes.push_back(probe);
  }
  cfg.validate();
  return cfg;
}

ThresholdConfig load_threshold_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open threshold config '" + path.string() + "'");
  return parse_threshold_config(in, path.string());
}

QualityResult apply_thresholds(const QualityValues& values, const ThresholdConfig& cfg) {
  cfg.validate();
  QualityResult result;
  result.values = values;

  std::unordered_map<std::string, MetricValue> fields;
  for (auto& [name, v] : quality_fields(values)) fields.emplace(std::move(name), std::move(v));

  for (const auto& [name, b] : cfg.bounds) {
    bool ok = true;
    const auto it = fields.find(name);
    const std::optional<double> v = it == fields.end() ? std::nullopt : as_number(it->second);
    if (b.min || b.max) {
      ok = v.has_value() && (!b.min || *v >= *b.min) && (!b.max || *v <= *b.max);
    }
    result.verdicts.emplace_back(name, ok);
  }
  for (const auto& [probe, required] : cfg.required_contains) {
    const auto it = std::find_if(values.contains.begin(), values.contains.end(),
                                 [&](const auto& entry) { return entry.first == probe; });
    const bool ok = it != values.contains.end() && it->second == required;
    result.verdicts.emplace_back("contains_" + probe, ok);
  }
  result.passed = std::all_of(result.verdicts.begin(), result.verdicts.end(), [](const auto& v) { return v.second; });
  return result;
}

}  // namespace textmetrics
