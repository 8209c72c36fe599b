#include "textmetrics/cli.hpp"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <json.hpp>

#include "support/conllu_writer.hpp"
#include "support/files.hpp"
#include "support/generators.hpp"

namespace textmetrics {
namespace {

using testing_support::read_file;
using testing_support::TempDir;
using testing_support::write_file;

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t nl = s.find('\n', pos);
    out.push_back(s.substr(pos, nl - pos));
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::string corpus(std::size_t n, unsigned seed) {
  gen::Rng rng(seed);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json j;
    j["id"] = "doc-" + std::to_string(i);
    j["text"] = gen::english_like(rng, gen::uniform(rng, 1, 10));
    out += j.dump() + "\n";
  }
  return out;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + TEXTMETRICS_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, AnalyzeWritesHeaderAndRowsInOrder) {
  TempDir dir;
  write_file(dir / "in.jsonl",
             "{\"id\":\"b\",\"text\":\"The cat sat on the mat. It was happy.\"}\n"
             "{\"id\":\"a\",\"text\":\"\"}\n"
             "{\"id\":\"c\",\"text\":\"Short one.\"}\n");
  ASSERT_EQ(cli_main({"analyze", "--input", (dir / "in.jsonl").string(), "--output", (dir / "out.csv").string()}),
            kExitOk);
  const auto rows = lines_of(read_file(dir / "out.csv"));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].rfind("id,n_tokens,", 0), 0u);
  EXPECT_NE(rows[0].find(",flesch_reading_ease,"), std::string::npos);
  EXPECT_NE(rows[0].find(",duplicate_line_fraction,"), std::string::npos);
  EXPECT_EQ(rows[1].rfind("b,9,8,27,", 0), 0u);
  EXPECT_NE(rows[1].find(",108.2675,"), std::string::npos);
  EXPECT_EQ(rows[2].rfind("a,0,0,0,,", 0), 0u);
  EXPECT_EQ(rows[3].rfind("c,", 0), 0u);
}

TEST(CliTest, AnalyzeJsonlOutput) {
  TempDir dir;
  write_file(dir / "in.jsonl", "{\"id\":\"x\",\"text\":\"Hello there.\"}\n");
  ASSERT_EQ(cli_main({"analyze", "--input", (dir / "in.jsonl").string(), "--metrics", "descriptive",
                      "--output-format", "jsonl", "--output", (dir / "out.jsonl").string()}),
            kExitOk);
  const auto j = nlohmann::json::parse(read_file(dir / "out.jsonl"));
  EXPECT_EQ(j["id"], "x");
  EXPECT_EQ(j["n_tokens"], 2);
}

TEST(CliTest, TextDirectoryInput) {
  TempDir dir;
  std::filesystem::create_directory(dir / "docs");
  write_file(dir / "docs" / "b.txt", "Second file.");
  write_file(dir / "docs" / "a.txt", "First file here.");
  ASSERT_EQ(cli_main({"analyze", "--input", (dir / "docs").string(), "--format", "text", "--metrics", "descriptive",
                      "--output", (dir / "out.csv").string()}),
            kExitOk);
  const auto rows = lines_of(read_file(dir / "out.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].rfind("a.txt,3,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("b.txt,2,", 0), 0u);
}

TEST(CliTest, ConlluWithSyntacticMetrics) {
  TempDir dir;
  write_file(dir / "in.conllu",
             "# newdoc id = s1\n"
             "1\tThe\t_\tDET\t_\t_\t2\tdet\t_\t_\n"
             "2\tdog\t_\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
             "3\tbarks\t_\tVERB\t_\t_\t0\troot\t_\t_\n\n");
  ASSERT_EQ(cli_main({"analyze", "--input", (dir / "in.conllu").string(), "--format", "conllu", "--metrics",
                      "dependency,pos", "--output", (dir / "out.csv").string()}),
            kExitOk);
  const auto rows = lines_of(read_file(dir / "out.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].rfind("id,dependency_distance_mean,dependency_distance_std,prop_adjacent_mean,", 0), 0u);
  EXPECT_EQ(rows[1].rfind("s1,0.666667,0,0.666667,0,", 0), 0u);
}

TEST(CliTest, ConfigurationErrorsExitTwo) {
  TempDir dir;
  write_file(dir / "in.jsonl", "{\"text\":\"Hi.\"}\n");
  const std::string in = (dir / "in.jsonl").string();
  EXPECT_EQ(cli_main({"analyze", "--input", in, "--metrics", "nonsense"}), kExitUsage);
  EXPECT_EQ(cli_main({"analyze", "--input", in, "--metrics", "pos"}), kExitUsage);
  EXPECT_EQ(cli_main({"analyze", "--input", in, "--metrics", "coherence"}), kExitUsage);
  EXPECT_EQ(cli_main({"analyze", "--input", in, "--jobs", "0"}), kExitUsage);
  EXPECT_EQ(cli_main({"analyze"}), kExitUsage);
  write_file(dir / "bad.conf", "alpha_ratio.min = 2\nalpha_ratio.max = 1\n");
  EXPECT_EQ(cli_main({"filter", "--input", in, "--config", (dir / "bad.conf").string(), "--passed",
                      (dir / "p.jsonl").string()}),
            kExitUsage);
}

TEST(CliTest, RuntimeErrorsExitOne) {
  TempDir dir;
  EXPECT_EQ(cli_main({"analyze", "--input", (dir / "missing.jsonl").string()}), kExitRuntime);
  write_file(dir / "bad.jsonl", "{\"text\":\"ok\"}\nnot json\n");
  EXPECT_EQ(cli_main({"analyze", "--input", (dir / "bad.jsonl").string(), "--output", (dir / "o.csv").string()}),
            kExitRuntime);
  EXPECT_EQ(cli_main({"analyze", "--input", (dir / "bad.jsonl").string(), "--lenient", "--output",
                      (dir / "o.csv").string()}),
            kExitOk);
}

TEST(CliTest, BinaryRejectsUnknownFlag) {
  EXPECT_EQ(run_binary("analyze --bogus"), kExitUsage);
  EXPECT_EQ(run_binary("--help"), kExitOk);
}

TEST(CliTest, FilterRoutesRepetitiveDocumentAndReports) {
  TempDir dir;
  nlohmann::json rep;
  rep["id"] = "spam";
  rep["text"] = "buy now\nbuy now\nbuy now\nbuy now\nok";
  write_file(dir / "in.jsonl", std::string("{\"id\":\"good\",\"text\":\"One line.\\nAnother line.\"}\n") +
                                   rep.dump() + "\n");
  write_file(dir / "t.conf", "duplicate_line_fraction.max = 0.3\nforbid_contains = lorem ipsum\n");
  ASSERT_EQ(cli_main({"filter", "--input", (dir / "in.jsonl").string(), "--config", (dir / "t.conf").string(),
                      "--passed", (dir / "p.jsonl").string(), "--failed", (dir / "f.jsonl").string(), "--report",
                      (dir / "r.json").string()}),
            kExitOk);
  EXPECT_EQ(read_file(dir / "p.jsonl"), "{\"id\":\"good\",\"text\":\"One line.\\nAnother line.\"}\n");
  EXPECT_EQ(read_file(dir / "f.jsonl"), rep.dump() + "\n");
  const auto report = nlohmann::json::parse(read_file(dir / "r.json"));
  EXPECT_EQ(report["total"], 2);
  EXPECT_EQ(report["passed"], 1);
  EXPECT_EQ(report["failed"], 1);
  EXPECT_EQ(report["fail_counts"]["duplicate_line_fraction"], 1);
  EXPECT_EQ(report["fail_counts"]["contains_lorem ipsum"], 0);
}

TEST(CliTest, PropertyJobsDoNotChangeOutput) {
  TempDir dir;
  write_file(dir / "in.jsonl", corpus(2500, 11));
  const std::string in = (dir / "in.jsonl").string();
  for (const std::string jobs : {"1", "3", "4"}) {
    ASSERT_EQ(cli_main({"analyze", "--input", in, "--jobs", jobs, "--output", (dir / ("o" + jobs)).string()}),
              kExitOk);
  }
  const std::string reference = read_file(dir / "o1");
  EXPECT_EQ(lines_of(reference).size(), 2501u);
  EXPECT_EQ(read_file(dir / "o3"), reference);
  EXPECT_EQ(read_file(dir / "o4"), reference);
}

// Analyzing parts separately and concatenating rows equals analyzing the whole.
TEST(CliTest, PropertyPartitionInvariance) {
  TempDir dir;
  const std::string all = corpus(60, 23);
  const auto docs = lines_of(all);
  std::string first, second;
  for (std::size_t i = 0; i < docs.size(); ++i) (i < 25 ? first : second) += docs[i] + "\n";
  write_file(dir / "all.jsonl", all);
  write_file(dir / "a.jsonl", first);
  write_file(dir / "b.jsonl", second);
  for (const std::string name : {"all", "a", "b"}) {
    ASSERT_EQ(cli_main({"analyze", "--input", (dir / (name + ".jsonl")).string(), "--output",
                        (dir / (name + ".csv")).string()}),
              kExitOk);
  }
  const auto whole = lines_of(read_file(dir / "all.csv"));
  const auto a = lines_of(read_file(dir / "a.csv"));
  const auto b = lines_of(read_file(dir / "b.csv"));
  std::vector<std::string> joined = a;
  joined.insert(joined.end(), b.begin() + 1, b.end());
  EXPECT_EQ(a[0], b[0]);
  EXPECT_EQ(joined, whole);
}

}  // namespace
}  // namespace textmetrics
