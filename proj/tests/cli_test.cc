// Runs the regmatch binary and checks output and exit status.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "regmatch/graph6.h"
#include "regmatch/matching.h"

namespace regmatch {
namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + REGMATCH_CLI + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("regmatch_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, Compute) {
  Result r = run("compute rsat --n 10 --m 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "edges=20\ndegree=4\n"));

  r = run("compute rsat --n 7 --m 2");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.out, "result=not-exist\nreason=order-too-large\n"));

  r = run("compute rex --n 12 --m 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "edges=24\ndegree=4\n"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("compute rsat --n ten --m 4").status, 2);
  EXPECT_EQ(run("compute rsat --m 4").status, 2);
  EXPECT_EQ(run("compute rex --n 5 --m 2").status, 2);
  EXPECT_EQ(run("compute nope --n 5 --m 2").status, 2);
  EXPECT_EQ(run("construct rsat --n 6 --m 2 --format png").status, 2);
  EXPECT_EQ(run("oracle rsat --n 11 --m 2").status, 2);
  EXPECT_EQ(run("oracle rsat --n 6 --m 2", "REGMATCH_THREADS=0").status, 2);
  EXPECT_EQ(run("oracle rsat --n 6 --m 2", "REGMATCH_THREADS=two").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST_F(CliTest, Construct) {
  Result r = run("construct rsat --n 6 --m 2 --format graph6");
  EXPECT_EQ(r.status, 0);
  ASSERT_FALSE(r.out.empty());
  const Graph g = parse_graph6(r.out.substr(0, r.out.size() - 1));
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(matching_number(g), 2);

  r = run("construct rex-cycles --n 11 --m 4 --format dot");
  EXPECT_EQ(r.status, 0);
  std::size_t edges = 0;
  for (std::size_t at = r.out.find(" -- "); at != std::string::npos;
       at = r.out.find(" -- ", at + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, 11u);

  r = run("construct rsat --n 8 --m 3");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.out, "divisibility-fails"));
}

TEST_F(CliTest, ConstructToFile) {
  const std::string path = (dir_ / "out.json").string();
  const Result r = run("construct rex-cliques --n 10 --m 4 --format json --out " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "verdict=pass"));
  std::ifstream in(path);
  const auto value = nlohmann::json::parse(in);
  EXPECT_EQ(value.at("order"), 10);
  EXPECT_EQ(value.at("edges").size(), 20u);
}

TEST_F(CliTest, Verify) {
  const std::string k3k3 = write("k3k3.g6", "EwCW\n");
  const std::string c6 = write("c6.g6", "EhEG\n");
  Result r = run("verify " + k3k3 + " --m 2 --mode saturated");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "verdict=pass"));

  r = run("verify " + c6 + " --m 2 --mode free");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.out, "nu=3\n"));
  EXPECT_TRUE(contains(r.out, "verdict=fail"));

  const std::string k5k5 = write("k5k5.g6", run("construct rsat --n 10 --m 4").out);
  r = run("verify " + k5k5 + " --m 4 --mode rsat-extremal");
  EXPECT_EQ(r.status, 0);

  EXPECT_EQ(run("verify " + write("bad.g6", "E~~~~~~\n") + " --m 2 --mode free").status, 2);
  EXPECT_EQ(run("verify " + (dir_ / "missing.g6").string() + " --m 2 --mode free").status, 2);
  EXPECT_EQ(run("verify " + k3k3 + " --m 3 --mode rex-extremal").status, 2);
}

TEST_F(CliTest, ConstructVerifyPipelineClosure) {
  const char* kinds[][2] = {{"rsat", "rsat-extremal"},
                            {"rex-cycles", "rex-extremal"},
                            {"rex-cliques", "rex-extremal"}};
  int pipelines = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 2 * m + 2; n <= 20; ++n) {
      for (const auto& [kind, mode] : kinds) {
        const std::string args = " --n " + std::to_string(n) + " --m " + std::to_string(m);
        const Result built = run(std::string("construct ") + kind + args);
        if (built.status == 1) continue;
        ASSERT_EQ(built.status, 0) << kind << args;
        const std::string path = write("pipe.g6", built.out);
        const Result checked =
            run(std::string("verify ") + path + " --m " + std::to_string(m) + " --mode " + mode);
        EXPECT_EQ(checked.status, 0) << kind << args;
        ++pipelines;
      }
    }
  }
  EXPECT_GT(pipelines, 100);
  // Through an actual shell pipe as well.
  EXPECT_EQ(run("construct rsat --n 15 --m 5 | " REGMATCH_CLI " verify - --m 5 --mode rsat-extremal")
                .status,
            0);
}

TEST_F(CliTest, Oracle) {
  Result r = run("oracle rsat --n 6 --m 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "answer=6\n"));
  EXPECT_TRUE(contains(r.out, "exhaustive=true\n"));

  r = run("oracle rsat --n 7 --m 2");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.out, "answer=not-exist\n"));
  EXPECT_TRUE(contains(r.out, "exhaustive=true\n"));

  r = run("oracle rex --n 8 --m 3 --emit-witness");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "answer=8\n"));
  EXPECT_TRUE(contains(r.out, "witness_graph6="));

  r = run("oracle rex --n 8 --m 3 --labeled", "REGMATCH_THREADS=2");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "answer=8\n"));
}

TEST_F(CliTest, Decompose) {
  Result r = run("decompose " + write("k3k3.g6", "EwCW\n"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "S={}\n"));
  EXPECT_TRUE(contains(r.out, "q=2\n"));
  EXPECT_TRUE(contains(r.out, "d=[3,3]\n"));
  EXPECT_TRUE(contains(r.out, "witness_verdict=pass"));

  // K_{1,3} with centre 0.
  r = run("decompose " + write("star.g6", "Cs\n"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "S={0}\n"));
  EXPECT_TRUE(contains(r.out, "d=[1,1,1]\n"));

  r = run("decompose " + write("c6.g6", "EhEG\n"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "D={}\nA={}\nC={0,1,2,3,4,5}\n"));
  EXPECT_TRUE(contains(r.out, "note=perfect matching present"));
  EXPECT_FALSE(contains(r.out, "S="));
}

TEST_F(CliTest, JsonReports) {
  using nlohmann::json;
  json doc = json::parse(run("--json compute rsat --n 9 --m 3").out);
  EXPECT_EQ(doc.at("command"), "compute");
  EXPECT_EQ(doc.at("inputs").at("n"), 9);
  EXPECT_EQ(doc.at("result").at("edges"), 9);
  EXPECT_EQ(doc.at("status"), 0);
  EXPECT_TRUE(doc.at("error").is_null());

  // Flag placement after the subcommand is accepted too.
  doc = json::parse(run("oracle rsat --n 8 --m 3 --json").out);
  EXPECT_EQ(doc.at("result").at("proves_nonexistence"), true);
  EXPECT_EQ(doc.at("status"), 1);

  doc = json::parse(run("--json decompose " + write("c6.g6", "EhEG\n")).out);
  EXPECT_TRUE(doc.at("result").at("witness").is_null());
  EXPECT_EQ(doc.at("result").at("decomposition").at("rest").size(), 6u);

  doc = json::parse(run("--json construct rsat --n 6 --m 2").out);
  EXPECT_EQ(doc.at("result").at("payload"), "EwCW\n");
  EXPECT_EQ(doc.at("result").at("certificate").at("passed"), true);

  // Re-running verify on the exported graph reproduces the certificate.
  const std::string g6 = doc.at("result").at("graph").at("graph6");
  const json again =
      json::parse(run("--json verify " + write("again.g6", g6 + "\n") + " --m 2 --mode rsat-extremal").out);
  EXPECT_EQ(again.at("result"), doc.at("result").at("certificate"));

  doc = json::parse(run("--json verify " + (dir_ / "none.g6").string() + " --m 1 --mode free").out);
  EXPECT_EQ(doc.at("status"), 2);
  EXPECT_FALSE(doc.at("error").is_null());
}

}  // namespace
}  // namespace regmatch
