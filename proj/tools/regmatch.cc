// regmatch: compute, construct, verify, search and decompose.
//
// Exit status: 0 for a positive verdict, 1 for a negative one, 2 for usage or
// input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "regmatch/certification.h"
#include "regmatch/constructions.h"
#include "regmatch/extremal.h"
#include "regmatch/gallai_edmonds.h"
#include "regmatch/graph.h"
#include "regmatch/graph6.h"
#include "regmatch/matching.h"
#include "regmatch/oracle.h"
#include "regmatch/report.h"

namespace regmatch {
namespace {

using nlohmann::json;

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Raised for bad input discovered after argument parsing.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Run {
  std::string command;
  json inputs = json::object();
  json result = nullptr;
  std::string text;  // human form, printed when --json is off
  int status = kPositive;
};

Graph read_graph6_input(const std::string& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    content.assign(std::istreambuf_iterator<char>(in), {});
  }
  while (!content.empty() && (content.back() == '\n' || content.back() == '\r')) {
    content.pop_back();
  }
  if (content.find('\n') != std::string::npos) {
    throw InputError("expected exactly one graph6 line in " + path);
  }
  try {
    return parse_graph6(content);
  } catch (const Graph6Error& e) {
    throw InputError(std::string("graph6: ") + e.what());
  }
}

int oracle_threads() {
  const char* env = std::getenv("REGMATCH_THREADS");
  const int hardware = std::max(1u, std::thread::hardware_concurrency());
  if (env == nullptr) return hardware;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || value < 1) {
    throw InputError("REGMATCH_THREADS must be a positive integer");
  }
  return std::min(value, hardware);
}

int status_of(const ExtremalAnswer& answer) {
  return answer.exists() ? kPositive : kNegative;
}

void cmd_compute(Run& run, const std::string& kind, int n, int m) {
  run.inputs = {{"kind", kind}, {"n", n}, {"m", m}};
  const ExtremalAnswer answer = kind == "rsat" ? rsat_matching(n, m) : rex_matching(n, m);
  run.result = to_json(answer);
  run.text = to_text(answer);
  run.status = status_of(answer);
}

std::string render(const Graph& graph, const std::string& format) {
  if (format == "graph6") return to_graph6(graph) + "\n";
  if (format == "dot") return to_dot(graph);
  return graph_to_json(graph).dump(2) + "\n";
}

void cmd_construct(Run& run, const std::string& kind, int n, int m, const std::string& format,
                  const std::string& out_path) {
  run.inputs = {{"kind", kind}, {"n", n}, {"m", m}, {"format", format},
                {"out", out_path.empty() ? json(nullptr) : json(out_path)}};
  const ExtremalAnswer formula = kind == "rsat" ? rsat_matching(n, m) : rex_matching(n, m);
  if (!formula.exists()) {
    run.result = {{"formula", to_json(formula)}, {"graph", nullptr},
                  {"certificate", nullptr}, {"payload", nullptr}};
    run.text = to_text(formula);
    run.status = kNegative;
    return;
  }
  Graph graph;
  if (kind == "rsat") {
    graph = rsat_extremal(n, m);
  } else if (kind == "rex-cycles") {
    graph = rex_extremal_cycles(n, m);
  } else {
    graph = rex_extremal_clique_form(n, m);
  }
  const Certificate cert = kind == "rsat" ? certify_rsat_extremal(graph, n, m)
                                          : certify_rex_extremal(graph, n, m);
  run.result = {{"formula", to_json(formula)}, {"graph", graph_to_json(graph)},
                {"certificate", to_json(cert)}, {"payload", nullptr}};
  if (!cert.passed()) {
    // Never emit a graph that fails its own certificate.
    run.text = to_text(cert);
    run.status = kNegative;
    return;
  }
  const std::string payload = render(graph, format);
  if (out_path.empty()) {
    run.result["payload"] = payload;
    run.text = payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << payload) || !out.flush()) {
      throw InputError("cannot write " + out_path);
    }
    run.text = "wrote=" + out_path + "\n" + to_text(cert);
  }
}

void cmd_verify(Run& run, const std::string& input, int m, const std::string& mode) {
  run.inputs = {{"input", input}, {"m", m}, {"mode", mode}};
  const Graph graph = read_graph6_input(input);
  const Certificate cert = certify(*parse_certificate_kind(mode), graph, m);
  run.result = to_json(cert);
  run.text = to_text(cert);
  run.status = cert.passed() ? kPositive : kNegative;
}

void cmd_oracle(Run& run, const std::string& kind, int n, int m, std::optional<double> budget,
               bool emit_witness, bool labeled) {
  run.inputs = {{"kind", kind}, {"n", n}, {"m", m},
                {"budget_seconds", budget ? json(*budget) : json(nullptr)},
                {"emit_witness", emit_witness}, {"labeled", labeled}};
  if (n > kOracleMaxOrder) {
    throw InputError("oracle order cap is " + std::to_string(kOracleMaxOrder));
  }
  OracleOptions options;
  options.threads = oracle_threads();
  options.fix_first_neighborhood = !labeled;
  if (budget) options.budget = std::chrono::duration<double>(*budget);
  run.inputs["threads"] = options.threads;
  const SearchOutcome outcome = kind == "rsat" ? oracle_rsat(n, m, options)
                                              : oracle_rex(n, m, options);
  run.result = to_json(outcome);
  run.text = to_text(outcome);
  if (emit_witness && outcome.witness) {
    run.text += "witness_graph6=" + to_graph6(*outcome.witness) + "\n";
  } else {
    run.result["witness_graph6"] = nullptr;
  }
  run.status = outcome.found() ? kPositive : kNegative;
}

void cmd_decompose(Run& run, const std::string& input) {
  run.inputs = {{"input", input}};
  const Graph graph = read_graph6_input(input);
  const GallaiEdmondsDecomposition ge = gallai_edmonds(graph);
  run.result = {{"decomposition", to_json(ge)}, {"witness", nullptr}, {"note", nullptr}};
  run.text = to_text(ge);
  if (has_perfect_matching(graph)) {
    const std::string note = "perfect matching present; no barrier witness";
    run.result["note"] = note;
    run.text += "note=" + note + "\n";
    return;
  }
  const BarrierReport report =
      verify_barrier(graph, factor_critical_barrier(graph), ge.matching_number);
  run.result["witness"] = to_json(report);
  run.text += to_text(report);
  run.status = report.passed() ? kPositive : kNegative;
}

void emit(const Run& run, bool as_json, const std::optional<std::string>& error) {
  if (as_json) {
    json doc = {{"command", run.command},
                {"inputs", run.inputs},
                {"result", error ? json(nullptr) : run.result},
                {"status", run.status},
                {"error", error ? json(*error) : json(nullptr)}};
    std::cout << doc.dump(2) << "\n";
  } else if (error) {
    std::cerr << "regmatch " << run.command << ": " << *error << "\n";
  } else {
    std::cout << run.text;
  }
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Regular saturation and Turan numbers for matchings"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print one JSON document instead of key=value lines");

  int n = 0;
  int m = 0;
  std::string kind;
  std::string input;
  std::string format = "graph6";
  std::string out_path;
  std::string mode;
  std::optional<double> budget;
  bool emit_witness = false;
  bool labeled = false;

  auto* compute = app.add_subcommand("compute", "Closed-form rsat or rex value");
  compute->add_option("kind", kind)->required()->check(CLI::IsMember({"rsat", "rex"}));
  compute->add_option("--n", n, "Order")->required();
  compute->add_option("--m", m, "Matching bound")->required();

  auto* construct = app.add_subcommand("construct", "Build and certify an extremal graph");
  construct->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"rsat", "rex-cycles", "rex-cliques"}));
  construct->add_option("--n", n, "Order")->required();
  construct->add_option("--m", m, "Matching bound")->required();
  construct->add_option("--format", format, "graph6, dot or json")
      ->check(CLI::IsMember({"graph6", "dot", "json"}));
  construct->add_option("--out", out_path, "Output path (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Certify a graph6 graph");
  verify->add_option("input", input, "graph6 file, or - for standard input")->required();
  verify->add_option("--m", m, "Matching bound")->required();
  verify->add_option("--mode", mode, "free, saturated, rsat-extremal or rex-extremal")
      ->required()
      ->check(CLI::IsMember({"free", "saturated", "rsat-extremal", "rex-extremal"}));

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over regular graphs");
  oracle->add_option("kind", kind)->required()->check(CLI::IsMember({"rsat", "rex"}));
  oracle->add_option("--n", n, "Order (at most 10)")->required();
  oracle->add_option("--m", m, "Matching bound")->required();
  oracle->add_option("--budget-seconds", budget, "Wall-clock budget")
      ->check(CLI::PositiveNumber);
  oracle->add_flag("--emit-witness", emit_witness, "Print the witness as graph6");
  oracle->add_flag("--labeled", labeled, "Enumerate every labeling (no prefix fixing)");

  auto* decompose = app.add_subcommand("decompose", "Gallai-Edmonds sets and barrier witness");
  decompose->add_option("input", input, "graph6 file, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPositive : kUsage;
  }

  Run run;
  run.command = app.get_subcommands().front()->get_name();
  try {
    if (*compute) {
      cmd_compute(run, kind, n, m);
    } else if (*construct) {
      cmd_construct(run, kind, n, m, format, out_path);
    } else if (*verify) {
      cmd_verify(run, input, m, mode);
    } else if (*oracle) {
      cmd_oracle(run, kind, n, m, budget, emit_witness, labeled);
    } else {
      cmd_decompose(run, input);
    }
  } catch (const NonexistentError& e) {
    run.status = kNegative;
    emit(run, as_json, e.what());
    return run.status;
  } catch (const std::invalid_argument& e) {
    run.status = kUsage;
    emit(run, as_json, e.what());
    return run.status;
  } catch (const InputError& e) {
    run.status = kUsage;
    emit(run, as_json, e.what());
    return run.status;
  }
  emit(run, as_json, std::nullopt);
  return run.status;
}

}  // namespace
}  // namespace regmatch

int main(int argc, char** argv) { return regmatch::main_impl(argc, argv); }
