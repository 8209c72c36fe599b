#include "textmetrics/quality.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "textmetrics/stop_words.hpp"
#include "textmetrics/unicode.hpp"

namespace textmetrics {

std::unordered_set<std::string> QualitySettings::default_stop_words() {
  std::unordered_set<std::string> out;
  for (std::string_view w : english_stop_words()) out.emplace(w);
  return out;
}

namespace {

constexpr std::string_view kAsciiSpace = " \t\r\n\f\v";

std::string_view rtrim(std::string_view s) {
  const auto last = s.find_last_not_of(kAsciiSpace);
  return last == std::string_view::npos ? std::string_view{} : s.substr(0, last + 1);
}

std::string_view trim(std::string_view s) {
  s = rtrim(s);
  const auto first = s.find_first_not_of(kAsciiSpace);
  return first == std::string_view::npos ? std::string_view{} : s.substr(first);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) {
      lines.push_back(text.substr(start));
      return lines;
    }
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t count_occurrences(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return 0;
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string_view::npos; pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

bool is_ellipsis(std::string_view s) { return s == "..." || s == "…"; }

DuplicateFractions duplicate_fractions(const std::vector<std::string>& units) {
  DuplicateFractions out;
  if (units.empty()) return out;
  std::unordered_set<std::string_view> seen;
  std::size_t duplicates = 0;
  std::size_t duplicate_chars = 0;
  std::size_t total_chars = 0;
  for (const std::string& u : units) {
    const std::size_t chars = unicode::length(u);
    total_chars += chars;
    if (!seen.insert(u).second) {
      ++duplicates;
      duplicate_chars += chars;
    }
  }
  out.fraction = static_cast<double>(duplicates) / static_cast<double>(units.size());
  out.chr_fraction = static_cast<double>(duplicate_chars) / static_cast<double>(total_chars);
  return out;
}

// Lowercased word tokens as dense ids, with their character lengths.
struct WordSequence {
  std::vector<std::uint32_t> ids;
  std::vector<std::size_t> lengths;
  std::size_t total_chars = 0;
};

WordSequence word_sequence(const Document& doc) {
  WordSequence seq;
  std::unordered_map<std::string, std::uint32_t> vocab;
  for (const Token& t : doc.tokens()) {
    if (!t.is_word) continue;
    const auto [it, inserted] = vocab.try_emplace(unicode::lower(t.text), static_cast<std::uint32_t>(vocab.size()));
    seq.ids.push_back(it->second);
    const std::size_t len = unicode::length(t.text);
    seq.lengths.push_back(len);
    seq.total_chars += len;
  }
  return seq;
}

// Groups every n-gram start position into exact equivalence classes. Classes
// are numbered in order of first occurrence. Candidates are bucketed by a
// rolling polynomial hash and confirmed by comparing the ids.
struct NgramClasses {
  std::vector<std::uint32_t> class_of;  // per start position
  std::vector<std::size_t> first;       // per class
  std::vector<std::size_t> count;       // per class
};

NgramClasses ngram_classes(const std::vector<std::uint32_t>& ids, std::size_t n) {
  NgramClasses out;
  if (n == 0 || ids.size() < n) return out;
  const std::size_t starts = ids.size() - n + 1;
  out.class_of.resize(starts);

  constexpr std::uint64_t kBase = 0x100000001b3ULL;
  std::uint64_t top_power = 1;  // kBase^(n-1)
  for (std::size_t k = 1; k < n; ++k) top_power *= kBase;

  std::uint64_t hash = 0;
  for (std::size_t k = 0; k < n; ++k) hash = hash * kBase + ids[k] + 1;

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  buckets.reserve(starts);
  for (std::size_t i = 0; i < starts; ++i) {
    if (i > 0) {
      hash = (hash - (ids[i - 1] + 1ULL) * top_power) * kBase + ids[i + n - 1] + 1;
    }
    auto& bucket = buckets[hash];
    std::uint32_t cls = 0;
    bool found = false;
    for (std::uint32_t c : bucket) {
      if (std::equal(ids.begin() + static_cast<std::ptrdiff_t>(out.first[c]),
                     ids.begin() + static_cast<std::ptrdiff_t>(out.first[c] + n),
                     ids.begin() + static_cast<std::ptrdiff_t>(i))) {
        cls = c;
        found = true;
        break;
      }
    }
    if (!found) {
      cls = static_cast<std::uint32_t>(out.first.size());
      out.first.push_back(i);
      out.count.push_back(0);
      bucket.push_back(cls);
    }
    ++out.count[cls];
    out.class_of[i] = cls;
  }
  return out;
}

double top_ngram_fraction(const WordSequence& seq, std::size_t n) {
  const NgramClasses classes = ngram_classes(seq.ids, n);
  if (classes.first.empty() || seq.total_chars == 0) return 0.0;
  std::size_t best = 0;
  for (std::size_t c = 1; c < classes.count.size(); ++c) {
    if (classes.count[c] > classes.count[best]) best = c;
  }
  std::size_t chars = 0;
  for (std::size_t k = 0; k < n; ++k) chars += seq.lengths[classes.first[best] + k];
  const double fraction =
      static_cast<double>(classes.count[best]) * static_cast<double>(chars) / static_cast<double>(seq.total_chars);
  return std::min(1.0, fraction);
}

double duplicate_ngram_fraction(const WordSequence& seq, std::size_t n) {
  const NgramClasses classes = ngram_classes(seq.ids, n);
  if (classes.first.empty() || seq.total_chars == 0) return 0.0;
  // +1 at each covered run start, -1 one past its end.
  std::vector<int> delta(seq.ids.size() + 1, 0);
  for (std::size_t i = 0; i < classes.class_of.size(); ++i) {
    if (classes.count[classes.class_of[i]] < 2) continue;
    ++delta[i];
    --delta[i + n];
  }
  std::size_t covered = 0;
  int depth = 0;
  for (std::size_t i = 0; i < seq.ids.size(); ++i) {
    depth += delta[i];
    if (depth > 0) covered += seq.lengths[i];
  }
  return static_cast<double>(covered) / static_cast<double>(seq.total_chars);
}

}  // namespace

QualityValues heuristic_quality(const Document& doc, const QualitySettings& settings) {
  QualityValues v;
  std::size_t alpha_words = 0;
  std::size_t chars = 0;
  for (const Token& t : doc.tokens()) {
    if (!t.is_word) continue;
    ++v.doc_length;
    chars += unicode::length(t.text);
    if (unicode::contains_alpha(t.text)) ++alpha_words;
    if (settings.stop_words.contains(unicode::lower(t.text))) ++v.n_stop_words;
  }
  if (v.doc_length > 0) {
    const double words = static_cast<double>(v.doc_length);
    v.alpha_ratio = static_cast<double>(alpha_words) / words;
    v.mean_word_length = static_cast<double>(chars) / words;
  }

  std::size_t lines = 0;
  std::size_t ellipsis = 0;
  std::size_t bullets = 0;
  for (std::string_view raw : split_lines(doc.text())) {
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    ++lines;
    if (line.ends_with("...") || line.ends_with("…")) ++ellipsis;
    for (std::string_view b : {"-", "*", "•", "‣", "◦"}) {
      if (line.starts_with(b)) {
        ++bullets;
        break;
      }
    }
  }
  if (lines > 0) {
    v.proportion_ellipsis_lines = static_cast<double>(ellipsis) / static_cast<double>(lines);
    v.proportion_bullet_lines = static_cast<double>(bullets) / static_cast<double>(lines);
  }

  for (const std::string& symbol : settings.symbols) {
    std::size_t occurrences = 0;
    if (is_ellipsis(symbol)) {
      occurrences = count_occurrences(doc.text(), "...") + count_occurrences(doc.text(), "…");
    } else {
      occurrences = count_occurrences(doc.text(), symbol);
    }
    std::optional<double> ratio;
    if (v.doc_length > 0) ratio = static_cast<double>(occurrences) / static_cast<double>(v.doc_length);
    v.symbol_to_word_ratio.emplace_back(symbol, ratio);
  }

  const std::string lowered = unicode::lower(doc.text());
  for (const std::string& probe : settings.probes) {
    v.contains.emplace_back(probe, lowered.find(unicode::lower(probe)) != std::string::npos);
  }
  return v;
}

DuplicateFractions duplicate_line_fractions(std::string_view text) {
  std::vector<std::string> lines;
  for (std::string_view raw : split_lines(text)) {
    const std::string_view line = rtrim(raw);
    if (!line.empty()) lines.emplace_back(line);
  }
  return duplicate_fractions(lines);
}

DuplicateFractions duplicate_paragraph_fractions(std::string_view text) {
  std::vector<std::string> paragraphs;
  std::string current;
  bool open = false;
  for (std::string_view raw : split_lines(text)) {
    const std::string_view line = rtrim(raw);
    if (line.empty()) {
      if (open) paragraphs.push_back(std::move(current));
      current.clear();
      open = false;
      continue;
    }
    if (open) current += '\n';
    current += line;
    open = true;
  }
  if (open) paragraphs.push_back(std::move(current));
  return duplicate_fractions(paragraphs);
}

double top_ngram_chr_fraction(const Document& doc, std::size_t n) { return top_ngram_fraction(word_sequence(doc), n); }

double duplicate_ngram_chr_fraction(const Document& doc, std::size_t n) {
  return duplicate_ngram_fraction(word_sequence(doc), n);
}

QualityValues quality(const Document& doc, const QualitySettings& settings) {
  QualityValues v = heuristic_quality(doc, settings);

  const DuplicateFractions lines = duplicate_line_fractions(doc.text());
  v.duplicate_line_fraction = lines.fraction;
  v.duplicate_line_chr_fraction = lines.chr_fraction;
  const DuplicateFractions paragraphs = duplicate_paragraph_fractions(doc.text());
  v.duplicate_paragraph_fraction = paragraphs.fraction;
  v.duplicate_paragraph_chr_fraction = paragraphs.chr_fraction;

  const WordSequence seq = word_sequence(doc);
  for (std::size_t n = kTopNgramMin; n <= kTopNgramMax; ++n) {
    v.top_ngram_chr_fraction[n - kTopNgramMin] = top_ngram_fraction(seq, n);
  }
  for (std::size_t n = kDuplicateNgramMin; n <= kDuplicateNgramMax; ++n) {
    v.duplicate_ngram_chr_fraction[n - kDuplicateNgramMin] = duplicate_ngram_fraction(seq, n);
  }
  return v;
}

MetricFields quality_fields(const QualityValues& v) {
  MetricFields f;
  f.emplace_back("n_stop_words", to_metric(v.n_stop_words));
  f.emplace_back("alpha_ratio", to_metric(v.alpha_ratio));
  f.emplace_back("mean_word_length", to_metric(v.mean_word_length));
  f.emplace_back("doc_length", to_metric(v.doc_length));
  f.emplace_back("proportion_ellipsis_lines", to_metric(v.proportion_ellipsis_lines));
  f.emplace_back("proportion_bullet_lines", to_metric(v.proportion_bullet_lines));
  for (const auto& [symbol, ratio] : v.symbol_to_word_ratio) {
    f.emplace_back("symbol_to_word_ratio_" + symbol, to_metric(ratio));
  }
  for (const auto& [probe, present] : v.contains) f.emplace_back("contains_" + probe, MetricValue{present});
  f.emplace_back("duplicate_line_fraction", to_metric(v.duplicate_line_fraction));
  f.emplace_back("duplicate_paragraph_fraction", to_metric(v.duplicate_paragraph_fraction));
  f.emplace_back("duplicate_line_chr_fraction", to_metric(v.duplicate_line_chr_fraction));
  f.emplace_back("duplicate_paragraph_chr_fraction", to_metric(v.duplicate_paragraph_chr_fraction));
  for (std::size_t n = kTopNgramMin; n <= kTopNgramMax; ++n) {
    f.emplace_back("top_ngram_chr_fraction_" + std::to_string(n), MetricValue{v.top_ngram_chr_fraction[n - kTopNgramMin]});
  }
  for (std::size_t n = kDuplicateNgramMin; n <= kDuplicateNgramMax; ++n) {
    f.emplace_back("duplicate_ngram_chr_fraction_" + std::to_string(n),
                   MetricValue{v.duplicate_ngram_chr_fraction[n - kDuplicateNgramMin]});
  }
  return f;
}

std::vector<std::string> quality_field_names(const QualitySettings& settings) {
  QualityValues shape;
  for (const std::string& s : settings.symbols) shape.symbol_to_word_ratio.emplace_back(s, std::nullopt);
  for (const std::string& p : settings.probes) shape.contains.emplace_back(p, false);
  std::vector<std::string> names;
  for (auto& [name, value] : quality_fields(shape)) names.push_back(std::move(name));
  return names;
}

}  // namespace textmetrics
