#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "textmetrics/embeddings.hpp"
#include "textmetrics/quality.hpp"
#include "textmetrics/records.hpp"
#include "textmetrics/syllables.hpp"
#include "textmetrics/text_model.hpp"

namespace textmetrics {

enum class Component { descriptive, readability, dependency, pos, coherence, quality };

inline constexpr std::array<Component, 6> kAllComponents = {
    Component::descriptive, Component::readability, Component::dependency,
    Component::pos,         Component::coherence,   Component::quality};

std::string_view component_name(Component c);

/// Non-empty set of metric components. Record columns always follow the
/// fixed order descriptive, readability, dependency, pos, coherence,
/// quality, whatever order the selection was written in.
class MetricSelection {
 public:
  MetricSelection() = default;
  MetricSelection(std::initializer_list<Component> components);

  /// Comma-separated component names, e.g. "descriptive,readability".
  /// Throws ConfigError for unknown names or an empty list.
  static MetricSelection parse(std::string_view list);

  void add(Component c) { bits_ |= mask(c); }
  bool contains(Component c) const noexcept { return (bits_ & mask(c)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  bool needs_syntax() const noexcept { return contains(Component::dependency) || contains(Component::pos); }

 private:
  static unsigned mask(Component c) { return 1U << static_cast<unsigned>(c); }
  unsigned bits_ = 0;
};

/// Shared read-only inputs for extraction.
struct Resources {
  /// Required for coherence.
  const EmbeddingTable* embeddings = nullptr;
  /// Whether the documents come from an annotated source (CoNLL-U). Needed
  /// for the dependency and pos components.
  bool syntactic_input = false;
  QualitySettings quality;
  SyllableRules syllables;
};

/// Throws ConfigError when the selection is empty, asks for coherence
/// without embeddings, or for dependency/pos on unannotated input.
void validate_selection(const MetricSelection& sel, const Resources& resources);

/// Column names (without "id") for a selection; identical for every record.
std::vector<std::string> record_keys(const MetricSelection& sel, const Resources& resources);

/// Runs the selected components. When a document from an annotated source
/// lacks the annotation a component needs, its columns are null and a
/// warning is attached instead of failing. Throws ConfigError as
/// validate_selection does.
MetricsRecord extract_metrics(const Document& doc, const MetricSelection& sel, const Resources& resources);

}  // namespace textmetrics
