#include "textmetrics/extraction.hpp"

#include <algorithm>

#include "textmetrics/coherence.hpp"
#include "textmetrics/descriptive_stats.hpp"
#include "textmetrics/errors.hpp"
#include "textmetrics/readability.hpp"
#include "textmetrics/syntactic.hpp"

namespace textmetrics {

std::string_view component_name(Component c) {
  switch (c) {
    case Component::descriptive: return "descriptive";
    case Component::readability: return "readability";
    case Component::dependency: return "dependency";
    case Component::pos: return "pos";
    case Component::coherence: return "coherence";
    case Component::quality: return "quality";
  }
  return "?";
}

MetricSelection::MetricSelection(std::initializer_list<Component> components) {
  for (Component c : components) add(c);
}

MetricSelection MetricSelection::parse(std::string_view list) {
  MetricSelection sel;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view name = list.substr(start, comma - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    start = comma + 1;
    if (name.empty()) continue;
    const auto it = std::find_if(kAllComponents.begin(), kAllComponents.end(),
                                 [&](Component c) { return component_name(c) == name; });
    if (it == kAllComponents.end()) throw ConfigError("unknown metric component '" + std::string(name) + "'");
    sel.add(*it);
  }
  if (sel.empty()) throw ConfigError("metric selection is empty");
  return sel;
}

void validate_selection(const MetricSelection& sel, const Resources& resources) {
  if (sel.empty()) throw ConfigError("metric selection is empty");
  if (sel.contains(Component::coherence) && resources.embeddings == nullptr) {
    throw ConfigError("coherence needs an embedding table");
  }
  if (sel.needs_syntax() && !resources.syntactic_input) {
    throw ConfigError("dependency and pos metrics need annotated (CoNLL-U) input");
  }
}

namespace {

void append_summary(MetricFields& f, const std::string& prefix, const std::optional<SummaryStats>& s) {
  f.emplace_back(prefix + "_mean", s ? MetricValue{s->mean} : MetricValue{});
  f.emplace_back(prefix + "_median", s ? MetricValue{s->median} : MetricValue{});
  f.emplace_back(prefix + "_std", s ? MetricValue{s->std_dev} : MetricValue{});
}

void append_descriptive(MetricFields& f, const DescriptiveStats& d) {
  f.emplace_back("n_tokens", to_metric(d.n_tokens));
  f.emplace_back("n_unique_tokens", to_metric(d.n_unique_tokens));
  f.emplace_back("n_characters", to_metric(d.n_characters));
  f.emplace_back("proportion_unique_tokens", to_metric(d.proportion_unique_tokens));
  append_summary(f, "token_length", d.token_length);
  append_summary(f, "sentence_length", d.sentence_length);
  append_summary(f, "syllables_per_token", d.syllables_per_token);
}

void append_readability(MetricFields& f, const ReadabilityScores& r) {
  f.emplace_back("gunning_fog", to_metric(r.gunning_fog));
  f.emplace_back("smog", to_metric(r.smog));
  f.emplace_back("flesch_reading_ease", to_metric(r.flesch_reading_ease));
  f.emplace_back("flesch_kincaid_grade", to_metric(r.flesch_kincaid_grade));
  f.emplace_back("automated_readability_index", to_metric(r.automated_readability_index));
  f.emplace_back("coleman_liau_index", to_metric(r.coleman_liau_index));
  f.emplace_back("lix", to_metric(r.lix));
  f.emplace_back("rix", to_metric(r.rix));
}

void append_dependency(MetricFields& f, const DocumentDependencyStats& d) {
  f.emplace_back("dependency_distance_mean", to_metric(d.dependency_distance_mean));
  f.emplace_back("dependency_distance_std", to_metric(d.dependency_distance_std));
  f.emplace_back("prop_adjacent_mean", to_metric(d.prop_adjacent_mean));
  f.emplace_back("prop_adjacent_std", to_metric(d.prop_adjacent_std));
}

// Tags outside the UPOS inventory are counted as X so the column set stays
// fixed.
void append_pos(MetricFields& f, const std::optional<PosProportions>& pos) {
  std::array<double, kUposTags.size()> shares{};
  if (pos) {
    for (const auto& [tag, share] : *pos) {
      const auto it = std::find(kUposTags.begin(), kUposTags.end(), tag);
      const std::size_t slot = it == kUposTags.end() ? kUposTags.size() - 1 : static_cast<std::size_t>(it - kUposTags.begin());
      shares[slot] += share;
    }
  }
  for (std::size_t i = 0; i < kUposTags.size(); ++i) {
    f.emplace_back("pos_prop_" + std::string(kUposTags[i]), pos ? MetricValue{shares[i]} : MetricValue{});
  }
}

void append_coherence(MetricFields& f, const CoherenceScores& c) {
  f.emplace_back("first_order_coherence", to_metric(c.first_order));
  f.emplace_back("second_order_coherence", to_metric(c.second_order));
}

bool all_tagged(const Document& doc) {
  return std::all_of(doc.tokens().begin(), doc.tokens().end(), [](const Token& t) { return t.upos.has_value(); });
}

}  // namespace

std::vector<std::string> record_keys(const MetricSelection& sel, const Resources& resources) {
  MetricFields f;
  if (sel.contains(Component::descriptive)) append_descriptive(f, {});
  if (sel.contains(Component::readability)) append_readability(f, {});
  if (sel.contains(Component::dependency)) append_dependency(f, {});
  if (sel.contains(Component::pos)) append_pos(f, std::nullopt);
  if (sel.contains(Component::coherence)) append_coherence(f, {});
  std::vector<std::string> keys;
  keys.reserve(f.size());
  for (auto& [name, value] : f) keys.push_back(std::move(name));
  if (sel.contains(Component::quality)) {
    for (std::string& name : quality_field_names(resources.quality)) keys.push_back(std::move(name));
  }
  return keys;
}

MetricsRecord extract_metrics(const Document& doc, const MetricSelection& sel, const Resources& resources) {
  validate_selection(sel, resources);
  MetricsRecord record;
  record.id = doc.id();
  MetricFields& f = record.values;

  if (sel.contains(Component::descriptive)) append_descriptive(f, descriptive_stats(doc, resources.syllables));
  if (sel.contains(Component::readability)) append_readability(f, readability(doc, resources.syllables));

  if (sel.contains(Component::dependency)) {
    if (doc.has_syntax()) {
      append_dependency(f, document_dependency_stats(doc));
    } else {
      if (!doc.tokens().empty()) record.warnings.push_back("missing UPOS or HEAD annotation; dependency metrics are null");
      append_dependency(f, {});
    }
  }
  if (sel.contains(Component::pos)) {
    if (!doc.tokens().empty() && all_tagged(doc)) {
      append_pos(f, pos_proportions(doc));
    } else {
      if (!doc.tokens().empty()) record.warnings.push_back("missing UPOS annotation; pos metrics are null");
      append_pos(f, std::nullopt);
    }
  }
  if (sel.contains(Component::coherence)) append_coherence(f, coherence(doc, *resources.embeddings));
  if (sel.contains(Component::quality)) {
    for (auto& field : quality_fields(quality(doc, resources.quality))) f.push_back(std::move(field));
  }
  return record;
}

}  // namespace textmetrics
