#include "textmetrics/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "textmetrics/conllu.hpp"
#include "textmetrics/errors.hpp"
#include "textmetrics/extraction.hpp"
#include "textmetrics/jsonl.hpp"
#include "textmetrics/thresholds.hpp"

namespace textmetrics {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kBatchSize = 1024;

struct SourceDocument {
  Document doc;
  std::optional<std::string> raw;  // original JSONL line, when there is one
};

class DocumentSource {
 public:
  virtual ~DocumentSource() = default;
  virtual std::optional<SourceDocument> next() = 0;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

// Plain text: a file is one document (id = file name), a directory gives one
// document per regular file in name order, "-" reads stdin as one document.
class TextSource : public DocumentSource {
 public:
  TextSource(const std::string& input, std::string lang) : lang_(std::move(lang)) {
    if (input == "-") {
      stdin_ = true;
    } else if (fs::is_directory(input)) {
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file()) files_.push_back(entry.path());
      }
      std::sort(files_.begin(), files_.end());
    } else {
      files_.emplace_back(input);
    }
  }

  std::optional<SourceDocument> next() override {
    if (stdin_) {
      if (done_) return std::nullopt;
      done_ = true;
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      return SourceDocument{build_document("stdin", ss.str(), lang_), std::nullopt};
    }
    if (index_ >= files_.size()) return std::nullopt;
    const fs::path& path = files_[index_++];
    return SourceDocument{build_document(path.filename().string(), read_file(path), lang_), std::nullopt};
  }

 private:
  std::string lang_;
  std::vector<fs::path> files_;
  std::size_t index_ = 0;
  bool stdin_ = false;
  bool done_ = false;
};

class StreamOwner {
 public:
  explicit StreamOwner(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open input '" + path + "'");
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class JsonlSource : public DocumentSource {
 public:
  JsonlSource(const std::string& path, std::string lang, bool lenient)
      : owner_(path), reader_(owner_.stream(), std::move(lang), lenient, path) {}

  std::optional<SourceDocument> next() override {
    auto d = reader_.next();
    if (!d) return std::nullopt;
    return SourceDocument{std::move(d->doc), std::move(d->raw)};
  }
  std::size_t skipped() const { return reader_.skipped(); }

 private:
  StreamOwner owner_;
  JsonlReader reader_;
};

class ConlluSource : public DocumentSource {
 public:
  ConlluSource(const std::string& path, std::string lang) : owner_(path), reader_(owner_.stream(), std::move(lang), path) {}

  std::optional<SourceDocument> next() override {
    auto d = reader_.next();
    if (!d) return std::nullopt;
    return SourceDocument{std::move(*d), std::nullopt};
  }

 private:
  StreamOwner owner_;
  ConlluReader reader_;
};

std::unique_ptr<DocumentSource> open_source(const std::string& format, const std::string& path,
                                            const std::string& lang, bool lenient) {
  if (format == "text") return std::make_unique<TextSource>(path, lang);
  if (format == "jsonl") return std::make_unique<JsonlSource>(path, lang, lenient);
  return std::make_unique<ConlluSource>(path, lang);
}

void report_skipped(const DocumentSource& source) {
  if (const auto* jsonl = dynamic_cast<const JsonlSource*>(&source); jsonl && jsonl->skipped() > 0) {
    std::cerr << "warning: skipped " << jsonl->skipped() << " malformed input line(s)\n";
  }
}

class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open output '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw IoError("failed to write output");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<SourceDocument> read_batch(DocumentSource& source) {
  std::vector<SourceDocument> batch;
  while (batch.size() < kBatchSize) {
    auto d = source.next();
    if (!d) break;
    batch.push_back(std::move(*d));
  }
  return batch;
}

// Applies fn to every element on `jobs` workers; results keep input order.
// The first exception (in input order) is rethrown on the calling thread.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(const std::vector<SourceDocument>& batch, std::size_t jobs, Fn fn) {
  std::vector<std::optional<Result>> slots(batch.size());
  std::vector<std::exception_ptr> errors(batch.size());
  std::atomic<std::size_t> cursor{0};
  const auto work = [&] {
    for (std::size_t i = cursor++; i < batch.size(); i = cursor++) {
      try {
        slots[i].emplace(fn(batch[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(jobs, batch.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::vector<Result> out;
  out.reserve(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

struct AnalyzeOptions {
  std::string input;
  std::string format = "jsonl";
  std::string metrics = "descriptive,readability,quality";
  std::string output = "-";
  std::string output_format = "csv";
  std::string embeddings;
  std::string lang = "en";
  std::size_t jobs = 1;
  bool lenient = false;
};

struct FilterOptions {
  std::string input;
  std::string format = "jsonl";
  std::string config;
  std::string passed;
  std::string failed;
  std::string report;
  std::string lang = "en";
  std::size_t jobs = 1;
  bool lenient = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  const MetricSelection selection = MetricSelection::parse(opt.metrics);
  const OutputFormat out_format = parse_output_format(opt.output_format);

  Resources resources;
  resources.syntactic_input = opt.format == "conllu";
  resources.syllables = SyllableRules::for_language(opt.lang);
  std::optional<EmbeddingTable> table;
  if (!opt.embeddings.empty()) {
    std::ifstream in(opt.embeddings);
    if (!in) throw IoError("cannot open embeddings '" + opt.embeddings + "'");
    table = load_embeddings(in, opt.embeddings);
    resources.embeddings = &*table;
  }
  validate_selection(selection, resources);

  auto source = open_source(opt.format, opt.input, opt.lang, opt.lenient);
  OutputFile output(opt.output);
  RecordWriter writer(output.stream(), out_format, record_keys(selection, resources));

  while (true) {
    const std::vector<SourceDocument> batch = read_batch(*source);
    if (batch.empty()) break;
    const auto records = parallel_map<MetricsRecord>(
        batch, opt.jobs, [&](const SourceDocument& d) { return extract_metrics(d.doc, selection, resources); });
    for (const MetricsRecord& r : records) {
      for (const std::string& w : r.warnings) std::cerr << "warning: document '" << r.id << "': " << w << '\n';
      writer.write(r);
    }
  }
  writer.flush();
  output.close();
  report_skipped(*source);
  return kExitOk;
}

std::string jsonl_line(const SourceDocument& d) {
  if (d.raw) return *d.raw;
  nlohmann::ordered_json obj;
  obj["id"] = d.doc.id();
  obj["text"] = d.doc.text();
  return obj.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

int run_filter(const FilterOptions& opt) {
  ThresholdConfig cfg;
  try {
    cfg = load_threshold_config(opt.config);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }

  auto source = open_source(opt.format, opt.input, opt.lang, opt.lenient);
  OutputFile passed(opt.passed);
  std::optional<OutputFile> failed;
  if (!opt.failed.empty()) failed.emplace(opt.failed);

  std::vector<std::pair<std::string, std::size_t>> fail_counts;
  for (const auto& [name, b] : cfg.bounds) fail_counts.emplace_back(name, 0);
  for (const auto& [probe, required] : cfg.required_contains) fail_counts.emplace_back("contains_" + probe, 0);
  std::size_t total = 0;
  std::size_t n_passed = 0;

  while (true) {
    const std::vector<SourceDocument> batch = read_batch(*source);
    if (batch.empty()) break;
    const auto results = parallel_map<QualityResult>(batch, opt.jobs, [&](const SourceDocument& d) {
      return apply_thresholds(quality(d.doc, cfg.settings), cfg);
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++total;
      const QualityResult& r = results[i];
      for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
        if (!r.verdicts[k].second) ++fail_counts[k].second;
      }
      const std::string line = jsonl_line(batch[i]) + '\n';
      if (r.passed) {
        ++n_passed;
        passed.stream() << line;
      } else if (failed) {
        failed->stream() << line;
      }
    }
  }
  passed.close();
  if (failed) failed->close();

  if (!opt.report.empty()) {
    nlohmann::ordered_json report;
    report["total"] = total;
    report["passed"] = n_passed;
    report["failed"] = total - n_passed;
    report["fail_counts"] = nlohmann::ordered_json::object();
    for (const auto& [name, count] : fail_counts) report["fail_counts"][name] = count;
    OutputFile out(opt.report);
    out.stream() << report.dump(2) << '\n';
    out.close();
  }
  report_skipped(*source);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Document-level text metrics and corpus quality filtering", "textmetrics"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"text", "jsonl", "conllu"};

  AnalyzeOptions analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Compute metrics for every document");
  analyze_cmd->add_option("--input", analyze.input, "Input file ('-' for stdin; a directory for text)")->required();
  analyze_cmd->add_option("--format", analyze.format, "Input format")->check(CLI::IsMember(formats));
  analyze_cmd->add_option("--metrics", analyze.metrics,
                          "Comma-separated components: descriptive,readability,dependency,pos,coherence,quality");
  analyze_cmd->add_option("--output", analyze.output, "Output file ('-' for stdout)");
  analyze_cmd->add_option("--output-format", analyze.output_format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  analyze_cmd->add_option("--embeddings", analyze.embeddings, "Word embeddings in word2vec text format");
  analyze_cmd->add_option("--lang", analyze.lang, "Language code");
  analyze_cmd->add_option("--jobs", analyze.jobs, "Worker threads")->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--lenient", analyze.lenient, "Skip malformed JSONL lines instead of failing");

  FilterOptions filter;
  CLI::App* filter_cmd = app.add_subcommand("filter", "Split documents by quality thresholds");
  filter_cmd->add_option("--input", filter.input, "Input file ('-' for stdin; a directory for text)")->required();
  filter_cmd->add_option("--format", filter.format, "Input format")->check(CLI::IsMember(formats));
  filter_cmd->add_option("--config", filter.config, "Threshold config file")->required();
  filter_cmd->add_option("--passed", filter.passed, "JSONL output for passing documents")->required();
  filter_cmd->add_option("--failed", filter.failed, "JSONL output for failing documents");
  filter_cmd->add_option("--report", filter.report, "JSON report with per-metric failure counts");
  filter_cmd->add_option("--lang", filter.lang, "Language code");
  filter_cmd->add_option("--jobs", filter.jobs, "Worker threads")->check(CLI::PositiveNumber);
  filter_cmd->add_flag("--lenient", filter.lenient, "Skip malformed JSONL lines instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze);
    return run_filter(filter);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("textmetrics");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace textmetrics
