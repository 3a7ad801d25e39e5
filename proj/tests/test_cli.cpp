#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oppo/schema.hpp"
#include "oppo/turtle.hpp"
#include "paths.hpp"

using namespace oppo;

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the built binary through the shell; stdout captured via the pipe,
// stderr through a scratch file.
CmdResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string err_path = "/tmp/oppo_cli_stderr_" + std::to_string(counter++);
  std::string command = env;
  if (!command.empty()) command += " ";
  command += std::string(OPPO_CLI_PATH) + " " + args + " 2>" + err_path;

  CmdResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, n);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = testing::slurp(err_path);
  std::remove(err_path.c_str());
  return result;
}

std::string fixture() { return testing::data_path("fixtures/telegram.ttl"); }
std::string clash() { return testing::data_path("fixtures/disjoint_clash.ttl"); }
std::string cq2_file() { return testing::data_path("queries/cq2_max_12_months.rq"); }

int count_lines_containing(const std::string& text, const std::string& needle) {
  int count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (text.substr(pos, end - pos).find(needle) != std::string::npos) ++count;
    pos = end + 1;
  }
  return count;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("export-schema emits a parse-clean, deterministic schema file") {
  CmdResult first = run_cli("export-schema /tmp/oppo_schema_1.ttl");
  CHECK(first.code == 0);
  CmdResult second = run_cli("export-schema /tmp/oppo_schema_2.ttl");
  CHECK(second.code == 0);
  const std::string a = testing::slurp("/tmp/oppo_schema_1.ttl");
  const std::string b = testing::slurp("/tmp/oppo_schema_2.ttl");
  CHECK(a == b);

  auto parsed = turtle::parse(a);
  CHECK(parsed.graph == schema_to_graph(build_schema()));
  CHECK(validate_schema(build_schema()).empty());
}

TEST_CASE("export-schema to an unwritable path exits 2") {
  CmdResult result = run_cli("export-schema /nonexistent-dir/schema.ttl");
  CHECK(result.code == 2);
  CHECK(result.err.find("error:") != std::string::npos);
}

TEST_CASE("check accepts the fixture and rejects the injected clash") {
  CmdResult ok = run_cli("check " + fixture());
  CHECK(ok.code == 0);
  CHECK(ok.out == "consistent\n");

  CmdResult bad = run_cli("check " + fixture() + " " + clash());
  CHECK(bad.code == 1);
  CHECK(count_lines_containing(bad.out, "DISJOINT_VIOLATION") == 1);
  CHECK(bad.out.find("d9") != std::string::npos);
  CHECK(bad.out.find("inconsistent: 1 violation(s)") != std::string::npos);
}

TEST_CASE("check reports parse failures with file, line and column") {
  const std::string path =
      write_temp("oppo_cli_malformed.ttl", "@prefix e: <http://e/> .\ne:a e:p \"abc .\n");
  CmdResult result = run_cli("check " + path);
  CHECK(result.code == 2);
  CHECK(result.err.find(path + ":2:9:") != std::string::npos);
}

TEST_CASE("check --strict-typing annotates inferred types") {
  CmdResult bad = run_cli("check --strict-typing " + fixture() + " " + clash());
  CHECK(bad.code == 1);
  // The PersonalData leg of the clash is inferred from the asserted
  // financial type.
  CHECK(bad.out.find("(inferred TYPE_INHERIT)") != std::string::npos);
}

TEST_CASE("query runs the retention question from its shipped file") {
  CmdResult result = run_cli("query " + cq2_file() + " " + fixture());
  CHECK(result.code == 0);
  CHECK(count_lines_containing(result.out, "telegram#") == 4);

  CmdResult as_cq = run_cli("cq CQ2 " + fixture());
  CHECK(as_cq.code == 0);
  CHECK(as_cq.out == result.out);
}

TEST_CASE("query over an empty data file returns an empty table, exit 0") {
  const std::string empty = write_temp("oppo_cli_empty.ttl", "");
  CmdResult result = run_cli("query " + cq2_file() + " " + empty);
  CHECK(result.code == 0);
  CHECK(count_lines_containing(result.out, "telegram#") == 0);
  CHECK(result.out.find("?d") != std::string::npos);
}

TEST_CASE("json and text outputs agree on the row count") {
  CmdResult text = run_cli("query " + cq2_file() + " " + fixture());
  CmdResult json = run_cli("--json query " + cq2_file() + " " + fixture());
  CHECK(json.code == 0);
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["rows"].size() == 4);
  CHECK(static_cast<int>(doc["rows"].size()) ==
        count_lines_containing(text.out, "telegram#"));
}

TEST_CASE("cq validates its id argument") {
  CmdResult result = run_cli("cq CQ9 " + fixture());
  CHECK(result.code == 2);
  CHECK(result.err.find("unknown competency question") != std::string::npos);
}

TEST_CASE("cq --param switches the data class") {
  CmdResult result = run_cli("cq CQ3 --param oppo:IdentityPersonalData " + fixture());
  CHECK(result.code == 0);
  CHECK(result.out.find("twoFactorAuth") != std::string::npos);
  CHECK(result.out.find("endToEndEncryption") == std::string::npos);
}

TEST_CASE("report prints the score and agrees with its json form") {
  const std::string policy = "https://example.org/policies/telegram#policy";
  CmdResult text = run_cli("report " + policy + " " + fixture());
  CHECK(text.code == 0);
  CHECK(text.out.find("score: 0.6875") != std::string::npos);

  CmdResult json = run_cli("--json report " + policy + " " + fixture());
  CHECK(json.code == 0);
  auto doc = nlohmann::json::parse(json.out);
  const double score = doc["score"].get<double>();
  char rounded[32];
  std::snprintf(rounded, sizeof(rounded), "%.4f", score);
  CHECK(text.out.find(std::string("score: ") + rounded) != std::string::npos);
}

TEST_CASE("report rejects unknown policies with exit 1") {
  CmdResult result = run_cli("report https://example.org/nope " + fixture());
  CHECK(result.code == 1);
  CHECK(result.err.find("not a known privacy policy") != std::string::npos);
}

TEST_CASE("report --strict lowers the fixture score") {
  const std::string policy = "https://example.org/policies/telegram#policy";
  CmdResult strict = run_cli("report --strict " + policy + " " + fixture());
  CHECK(strict.code == 0);
  CHECK(strict.out.find("score: 0.6562") != std::string::npos);  // 21/32 rounded
}

TEST_CASE("the full pipeline is reproducible byte for byte") {
  auto run_pipeline = [&](const std::string& suffix) {
    run_cli("export-schema /tmp/oppo_pipe_schema_" + suffix + ".ttl");
    CmdResult check = run_cli("check " + fixture());
    CmdResult cq = run_cli("cq 2 " + fixture());
    return testing::slurp("/tmp/oppo_pipe_schema_" + suffix + ".ttl") + "\x1e" + check.out +
           "\x1e" + cq.out;
  };
  CHECK(run_pipeline("a") == run_pipeline("b"));
}

TEST_CASE("OPPO_PREFIX_BASE rebases the built-in namespace") {
  CmdResult result = run_cli("export-schema /tmp/oppo_rebased.ttl",
                             "OPPO_PREFIX_BASE=http://alt.example.com/kb#");
  CHECK(result.code == 0);
  const std::string text = testing::slurp("/tmp/oppo_rebased.ttl");
  CHECK(text.find("@prefix oppo: <http://alt.example.com/kb#> .") != std::string::npos);
  auto parsed = turtle::parse(text);
  SchemaConfig config;
  config.oppo_namespace = "http://alt.example.com/kb#";
  CHECK(parsed.graph == schema_to_graph(build_schema(config)));
}
