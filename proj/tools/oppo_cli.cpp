// Command-line frontend: load Turtle files, materialize, check consistency,
// run queries and competency questions, and score policy transparency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oppo/query.hpp"
#include "oppo/reasoner.hpp"
#include "oppo/schema.hpp"
#include "oppo/transparency.hpp"
#include "oppo/turtle.hpp"
#include "oppo/vocab.hpp"

namespace {

using namespace oppo;

// Exit codes: 0 success, 1 domain failure (inconsistent data, unknown
// policy), 2 parse/usage/io errors.
struct CliError {
  int code;
  std::string message;
};

SchemaConfig config_from_env() {
  SchemaConfig config;
  if (const char* base = std::getenv("OPPO_PREFIX_BASE")) {
    if (*base != '\0') config.oppo_namespace = base;
  }
  return config;
}

PrefixMap active_prefixes(const SchemaConfig& config,
                          const std::vector<std::string>& extra) {
  PrefixMap prefixes = builtin_prefixes(config);
  for (const std::string& spec : extra) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw CliError{2, "--prefix expects label=iri, got '" + spec + "'"};
    }
    try {
      prefixes.add(spec.substr(0, eq), Iri(spec.substr(eq + 1)));
    } catch (const Error& e) {
      throw CliError{2, std::string("--prefix: ") + e.what()};
    }
  }
  return prefixes;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_files(const std::vector<std::string>& paths) {
  Graph merged;
  for (const std::string& path : paths) {
    try {
      turtle::ParseResult result = turtle::parse(read_file(path));
      merged = merge(merged, result.graph);
    } catch (const turtle::ParseError& e) {
      const auto& d = e.diagnostic();
      throw CliError{2, path + ":" + std::to_string(d.line) + ":" +
                            std::to_string(d.column) + ": " + d.message};
    }
  }
  return merged;
}

Iri resolve_iri_argument(const std::string& text, const PrefixMap& prefixes) {
  try {
    if (text.find("://") != std::string::npos) return Iri(text);
    if (auto expanded = prefixes.expand(text)) return *expanded;
    throw CliError{2, "cannot resolve IRI argument '" + text + "'"};
  } catch (const Error& e) {
    throw CliError{2, e.what()};
  }
}

std::string rule_annotation(const reasoner::Closure& closure, const Triple& t) {
  if (closure.is_asserted(t)) return "";
  auto chain = reasoner::explain(closure, t);
  if (chain.empty() || !chain.front().rule) return "";
  return " (inferred " + std::string(reasoner::rule_name(*chain.front().rule)) + ")";
}

int run_export_schema(const std::string& out_path, const SchemaConfig& config) {
  Schema schema = build_schema(config);
  std::string text = turtle::serialize(schema_to_graph(schema), schema.prefixes());
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{2, "cannot open " + out_path + " for writing"};
  out << text;
  out.flush();
  if (!out) throw CliError{2, "failed to write " + out_path};
  return 0;
}

int run_check(const std::vector<std::string>& files, const SchemaConfig& config,
              bool strict_typing, bool json) {
  Schema schema = build_schema(config);
  Graph data = load_files(files);
  reasoner::Closure closure = reasoner::materialize(data, schema_to_graph(schema));
  reasoner::ConsistencyReport report = reasoner::check_consistency(closure.graph(), schema);

  if (json) {
    nlohmann::ordered_json doc;
    doc["consistent"] = report.consistent;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
      nlohmann::ordered_json entry;
      entry["rule"] = std::string(reasoner::rule_name(v.rule));
      entry["focus"] = render(v.focus);
      nlohmann::ordered_json details = nlohmann::ordered_json::array();
      for (const Triple& t : v.details) details.push_back(render(t));
      entry["details"] = std::move(details);
      violations.push_back(std::move(entry));
    }
    doc["violations"] = std::move(violations);
    std::cout << doc.dump(2) << "\n";
  } else if (report.consistent) {
    std::cout << "consistent\n";
  } else {
    for (const auto& v : report.violations) {
      std::cout << reasoner::rule_name(v.rule) << " " << render(v.focus) << " :";
      for (const Triple& t : v.details) {
        std::cout << " " << render(t.object);
        if (strict_typing) std::cout << rule_annotation(closure, t);
      }
      std::cout << "\n";
    }
    std::cout << "inconsistent: " << report.violations.size() << " violation(s)\n";
  }
  return report.consistent ? 0 : 1;
}

int run_query_text(std::string_view query_text, const std::vector<std::string>& files,
                   const SchemaConfig& config, const PrefixMap& prefixes, bool strict,
                   bool json, const std::optional<Iri>& cq3_param,
                   std::optional<query::CqId> cq) {
  Schema schema = build_schema(config);
  Graph data = load_files(files);
  reasoner::Closure closure = reasoner::materialize(data, schema_to_graph(schema));

  query::BindingTable table;
  try {
    if (cq) {
      table = query::run_cq(*cq, closure.graph(), prefixes, cq3_param);
    } else {
      query::QueryAst ast = query::parse_query(query_text, prefixes, strict);
      for (const std::string& warning : ast.warnings) {
        std::cerr << "warning: " << warning << "\n";
      }
      table = query::execute(ast, closure.graph());
    }
  } catch (const turtle::ParseError& e) {
    const auto& d = e.diagnostic();
    throw CliError{2, "query:" + std::to_string(d.line) + ":" + std::to_string(d.column) +
                          ": " + d.message};
  }
  std::cout << (json ? query::to_json(table) : query::to_text(table));
  return 0;
}

int run_report(const std::string& policy_text, const std::vector<std::string>& files,
               const SchemaConfig& config, const PrefixMap& prefixes, bool strict,
               bool json) {
  Schema schema = build_schema(config);
  Graph data = load_files(files);
  reasoner::Closure closure = reasoner::materialize(data, schema_to_graph(schema));
  Iri policy = resolve_iri_argument(policy_text, prefixes);

  transparency::ScoreOptions options;
  options.strict = strict;
  try {
    transparency::TransparencyReport report =
        transparency::score_policy(closure.graph(), policy, schema, options);
    std::cout << (json ? transparency::to_json(report) : transparency::to_text(report));
  } catch (const transparency::UnknownPolicyError& e) {
    throw CliError{1, e.what()};
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knowledge base for privacy-policy data practices"};
  app.require_subcommand(1);

  bool json = false;
  bool strict = false;
  std::vector<std::string> prefix_args;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit JSON instead of text");
    cmd->add_flag("--strict", strict,
                  "strict mode: query lints become errors, indefinite durations "
                  "count as unspecified");
    cmd->add_option("--prefix", prefix_args, "extra prefix binding label=iri")
        ->type_name("LABEL=IRI");
  };
  add_common(&app);

  auto* export_cmd = app.add_subcommand("export-schema", "write the built-in schema as Turtle");
  std::string export_out;
  export_cmd->add_option("out", export_out, "output file")->required();
  add_common(export_cmd);

  auto* check_cmd = app.add_subcommand("check", "materialize and check consistency");
  std::vector<std::string> check_files;
  bool strict_typing = false;
  check_cmd->add_option("files", check_files, "Turtle data files")->required();
  check_cmd->add_flag("--strict-typing", strict_typing,
                      "annotate violations whose types were inferred");
  add_common(check_cmd);

  auto* query_cmd = app.add_subcommand("query", "run a query file against data files");
  std::string query_file;
  std::vector<std::string> query_files;
  query_cmd->add_option("query", query_file, "query file")->required();
  query_cmd->add_option("files", query_files, "Turtle data files")->required();
  add_common(query_cmd);

  auto* cq_cmd = app.add_subcommand("cq", "run a bundled competency question");
  std::string cq_id_text;
  std::string cq_param;
  std::vector<std::string> cq_files;
  cq_cmd->add_option("id", cq_id_text, "competency question (CQ1, CQ2, CQ3)")->required();
  cq_cmd->add_option("files", cq_files, "Turtle data files")->required();
  cq_cmd->add_option("--param", cq_param, "data class IRI for CQ3");
  add_common(cq_cmd);

  auto* report_cmd = app.add_subcommand("report", "transparency report for one policy");
  std::string report_policy;
  std::vector<std::string> report_files;
  report_cmd->add_option("policy", report_policy, "policy IRI (full or prefixed)")->required();
  report_cmd->add_option("files", report_files, "Turtle data files")->required();
  add_common(report_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const SchemaConfig config = config_from_env();
    const PrefixMap prefixes = active_prefixes(config, prefix_args);
    if (*export_cmd) return run_export_schema(export_out, config);
    if (*check_cmd) return run_check(check_files, config, strict_typing, json);
    if (*query_cmd) {
      std::string text = read_file(query_file);
      return run_query_text(text, query_files, config, prefixes, strict, json,
                            std::nullopt, std::nullopt);
    }
    if (*cq_cmd) {
      auto id = query::parse_cq_id(cq_id_text);
      if (!id) throw CliError{2, "unknown competency question '" + cq_id_text + "'"};
      std::optional<Iri> param;
      if (!cq_param.empty()) param = resolve_iri_argument(cq_param, prefixes);
      return run_query_text("", cq_files, config, prefixes, strict, json, param, id);
    }
    if (*report_cmd) {
      return run_report(report_policy, report_files, config, prefixes, strict, json);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
