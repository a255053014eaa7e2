#pragma once

#include <pebbling/configuration.hpp>
#include <pebbling/enumerate_graphs.hpp>
#include <pebbling/graph.hpp>
#include <pebbling/graph_io.hpp>
#include <pebbling/parameters.hpp>
#include <pebbling/report.hpp>
#include <pebbling/search.hpp>
#include <pebbling/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pebbling::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kLimitExceeded = 3;

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> graph6;
  std::optional<std::string> edges_path;
  std::optional<std::string> family;
  std::optional<std::uint32_t> family_n;
  std::optional<std::uint32_t> target;
  std::optional<std::string> configuration;
  std::string mode = "at-least-one";
  std::uint32_t n_max = 5;
  std::uint64_t t_max = 8;
  std::uint64_t window = 4;
  unsigned jobs = default_jobs();
  std::string format = "human";
  std::optional<std::string> out_path;
  bool timing = false;
  bool skip_facts = false;
};

inline Graph load_graph(const RunConfig& run) {
  const int sources = int(run.graph6.has_value()) + int(run.edges_path.has_value()) + int(run.family.has_value());
  if (sources != 1) throw usage_error("give exactly one of --graph, --edges, --family");
  if (run.graph6) return parse_graph6(*run.graph6);
  if (run.edges_path) {
    std::ifstream in(*run.edges_path);
    if (!in) throw usage_error("cannot open edge list " + *run.edges_path);
    return read_edge_list(in);
  }
  if (!run.family_n) throw usage_error("--family needs --n");
  const std::uint32_t n = *run.family_n;
  if (*run.family == "complete") return make_complete(n);
  if (*run.family == "path") return make_path(n);
  if (*run.family == "cycle") return make_cycle(n);
  if (*run.family == "star") return make_star(n);
  throw usage_error("unknown family '" + *run.family + "'");
}

inline OutputFormat parse_format(const std::string& s) {
  if (s == "human") return OutputFormat::Human;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw usage_error("unknown format '" + s + "'");
}

class Output {
 public:
  Output(const RunConfig& run, std::ostream& stdout_stream) : stream_(&stdout_stream) {
    if (run.out_path) {
      file_.open(*run.out_path);
      if (!file_) throw usage_error("cannot write " + *run.out_path);
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

inline std::string witness_text(const std::vector<Move>& moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) out += (i ? "," : "") + to_string(moves[i]);
  return out;
}

inline int cmd_solve(const RunConfig& run, std::ostream& out) {
  const Graph g = load_graph(run);
  if (!run.configuration) throw usage_error("solve needs --config");
  if (!run.target) throw usage_error("solve needs --target");
  const auto mode = parse_goal_mode(run.mode);
  if (!mode) throw usage_error("unknown mode '" + run.mode + "'");
  const Configuration c = parse_configuration(*run.configuration);
  const VertexId target{*run.target};
  const SolveResult result = solvable(g, c, target, *mode);

  Output sink(run, out);
  if (parse_format(run.format) == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["graph6"] = encode_graph6(g);
    j["config"] = format_configuration(c);
    j["target"] = target.index();
    j["mode"] = to_string(*mode);
    j["solvable"] = result.solvable;
    if (result.witness) {
      j["witness"] = nlohmann::ordered_json::array();
      for (const Move& m : *result.witness) j["witness"].push_back({m.source.index(), m.destination.index()});
    } else {
      j["witness"] = nullptr;
    }
    j["states_explored"] = result.states_explored;
    sink.stream() << j.dump(2) << "\n";
  } else {
    sink.stream() << (result.solvable ? "solvable" : "unsolvable") << "\n";
    if (result.witness) sink.stream() << "witness: " << witness_text(*result.witness) << "\n";
    sink.stream() << "states_explored: " << result.states_explored << "\n";
  }
  return kOk;
}

/// Shared by `pi` and `pis`.
inline int cmd_parameter(const RunConfig& run, std::ostream& out, bool singular) {
  const Graph g = load_graph(run);
  const GoalMode mode = singular ? GoalMode::ExactlyOne : GoalMode::AtLeastOne;
  const ExtendedCount value = singular ? singular_pebbling_number(g) : pebbling_number(g);
  std::optional<BlockingConfiguration> witness;
  if (value.is_finite()) witness = find_unsolvable_witness(g, value.value() - 1, mode);

  Output sink(run, out);
  if (parse_format(run.format) == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["graph6"] = encode_graph6(g);
    j["n"] = g.order();
    j[singular ? "pi_s" : "pi"] = value.is_infinite() ? nlohmann::ordered_json("infinite")
                                                      : nlohmann::ordered_json(value.value());
    j["witness_config"] = witness ? nlohmann::ordered_json(format_configuration(witness->configuration)) : nullptr;
    j["witness_target"] = witness ? nlohmann::ordered_json(witness->target.index()) : nullptr;
    sink.stream() << j.dump(2) << "\n";
  } else {
    sink.stream() << to_string(value) << "\n";
    if (witness) {
      sink.stream() << "blocking configuration of size " << value.value() - 1 << ": "
                    << format_configuration(witness->configuration) << " target " << witness->target.index()
                    << "\n";
    }
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& run, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.n_max = run.n_max;
  options.t_max = run.t_max;
  options.window = run.window;
  options.jobs = run.jobs;
  options.run_fact_checks = !run.skip_facts;
  const ReportStyle style{parse_format(run.format), run.timing};

  err << "verifying " << "3 <= n <= " << run.n_max << " with " << run.jobs << " job(s)\n";
  const VerificationReport report = verify_theorem(options);
  Output sink(run, out);
  sink.stream() << render_report(report, style);
  err << "covered " << report.connected_classes() << " connected classes\n";
  if (report.pass()) return kOk;
  for (const auto& c : report.checks) {
    if (!c.pass) {
      err << "FAILED " << c.name << ": " << c.counterexample.value_or("") << "\n";
      break;
    }
  }
  return kVerificationFailed;
}

inline int cmd_enumerate(const RunConfig& run, std::ostream& out) {
  Output sink(run, out);
  for (const Graph& g : enumerate_connected_graphs(run.n_max)) sink.stream() << encode_graph6(g) << "\n";
  return kOk;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  RunConfig run;
  CLI::App app{"Exact solver for graph pebbling and singular pebbling"};
  app.require_subcommand(1);

  auto add_graph_flags = [&](CLI::App* sub) {
    sub->add_option("--graph", run.graph6, "graph6 string");
    sub->add_option("--edges", run.edges_path, "edge-list file");
    sub->add_option("--family", run.family, "complete | path | cycle | star");
    sub->add_option("--n", run.family_n, "vertex count for --family");
  };
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", run.format, "human | json | csv");
    sub->add_option("--out", run.out_path, "write the report here instead of stdout");
  };

  auto* solve = app.add_subcommand("solve", "decide one configuration");
  add_graph_flags(solve);
  add_output_flags(solve);
  solve->add_option("--config", run.configuration, "comma-separated counts, e.g. 0,4,0");
  solve->add_option("--target", run.target, "target vertex label");
  solve->add_option("--mode", run.mode, "at-least-one | exactly-one");

  auto* pi = app.add_subcommand("pi", "pebbling number");
  add_graph_flags(pi);
  add_output_flags(pi);
  auto* pis = app.add_subcommand("pis", "singular pebbling number");
  add_graph_flags(pis);
  add_output_flags(pis);

  auto* verify = app.add_subcommand("verify", "sweep all small connected graphs and run the property checks");
  add_output_flags(verify);
  verify->add_option("--n-max", run.n_max, "largest graph order (3..7)");
  verify->add_option("--t-max", run.t_max, "largest configuration size for property checks");
  verify->add_option("--window", run.window, "extra sizes in the brute-force singular check");
  verify->add_option("--jobs", run.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", run.timing, "include wall-clock times in the report");
  verify->add_flag("--skip-facts", run.skip_facts, "only compute the parameters");

  auto* enumerate = app.add_subcommand("enumerate", "list connected graphs on n vertices as graph6");
  add_output_flags(enumerate);
  enumerate->add_option("--n", run.n_max, "graph order (1..7)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (solve->parsed()) return cmd_solve(run, out);
    if (pi->parsed()) return cmd_parameter(run, out, false);
    if (pis->parsed()) return cmd_parameter(run, out, true);
    if (verify->parsed()) return cmd_verify(run, out, err);
    if (enumerate->parsed()) return cmd_enumerate(run, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const limit_error& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kLimitExceeded;
  }
  return kUsageError;
}

}  // namespace pebbling::cli
