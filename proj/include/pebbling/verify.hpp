#pragma once

#include <pebbling/configuration.hpp>
#include <pebbling/enumerate_graphs.hpp>
#include <pebbling/extended_count.hpp>
#include <pebbling/graph.hpp>
#include <pebbling/graph_io.hpp>
#include <pebbling/parameters.hpp>
#include <pebbling/search.hpp>
#include <pebbling/sweep.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace pebbling {

/// Outcome of one exhaustive property check.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool pass = true;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;  // first failure, if any

  void fail(std::string what) {
    if (pass) counterexample = std::move(what);
    pass = false;
  }
  void merge(const CheckReport& other) {
    cases += other.cases;
    if (!other.pass) fail(other.counterexample.value_or(""));
  }
};

namespace detail {

inline std::string describe(const Graph& g, const Configuration& c, VertexId target) {
  return "graph " + encode_graph6(g) + ", configuration " + format_configuration(c) + ", target " +
         std::to_string(target.index());
}

template <class Fn>
void for_each_configuration(std::uint32_t n, std::uint64_t t, std::optional<TargetConstraint> constraint,
                            Fn&& fn) {
  for (CompositionCursor cur(n, t, constraint); !cur.done(); cur.advance()) {
    auto s = cur.counts();
    fn(Configuration(std::vector<PebbleCount>(s.begin(), s.end())));
  }
}

/// Can some move sequence that never touches the target (which keeps its 2
/// pebbles) put a pebble on a neighbour of the target? The starting state
/// counts.
inline bool neighbor_reachable_with_target_held(const Graph& g, const Configuration& c, VertexId target) {
  const Graph::Row hood = g.row(target.index());
  const auto n = g.order();
  std::unordered_set<std::string> seen;
  std::vector<std::vector<PebbleCount>> stack;
  stack.emplace_back(c.counts().begin(), c.counts().end());
  while (!stack.empty()) {
    auto state = std::move(stack.back());
    stack.pop_back();
    for (Graph::Row h = hood; h != 0; h &= h - 1) {
      if (state[std::countr_zero(h)] > 0) return true;
    }
    std::string key(reinterpret_cast<const char*>(state.data()), state.size() * sizeof(PebbleCount));
    if (!seen.insert(std::move(key)).second) continue;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (u == target.index() || state[u] < 2) continue;
      for (VertexId w : neighbors(g, VertexId{u})) {
        if (w == target) continue;
        auto next = state;
        next[u] -= 2;
        next[w.index()] += 1;
        stack.push_back(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace detail

/// Three or more pebbles on a non-isolated target always admit an exactly-one
/// solution. Checked by direct search over every configuration of size <= t_max.
inline CheckReport verify_fact_1(const Graph& g, std::uint64_t t_max) {
  CheckReport report{"fact_1"};
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    const VertexId target{v};
    if (is_isolated(g, target)) continue;
    GameSearch direct(g, target, GoalMode::ExactlyOne);
    for (std::uint64_t s = 3; s <= t_max; ++s) {
      for (std::uint64_t k = 3; k <= s; ++k) {
        detail::for_each_configuration(g.order(), s, TargetConstraint{target, static_cast<PebbleCount>(k)},
                                       [&](const Configuration& c) {
                                         ++report.cases;
                                         if (!direct.solvable(c)) report.fail(detail::describe(g, c, target));
                                       });
      }
    }
  }
  return report;
}

/// With 2 pebbles on the target, if a pebble can be brought onto a neighbour of
/// the target while the target keeps its pair (moving the pair itself does not
/// count), the configuration is exactly-one solvable.
inline CheckReport verify_fact_3(const Graph& g, std::uint64_t t_max, std::uint64_t* triggered = nullptr) {
  CheckReport report{"fact_3"};
  if (g.order() < 2 || !is_connected(g)) throw usage_error("fact 3 check needs a connected graph on >= 2 vertices");
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    const VertexId target{v};
    GameSearch direct(g, target, GoalMode::ExactlyOne);
    for (std::uint64_t s = 2; s <= t_max; ++s) {
      detail::for_each_configuration(g.order(), s, TargetConstraint{target, 2}, [&](const Configuration& c) {
        ++report.cases;
        if (!detail::neighbor_reachable_with_target_held(g, c, target)) return;
        if (triggered) ++*triggered;
        if (!direct.solvable(c)) report.fail(detail::describe(g, c, target));
      });
    }
  }
  return report;
}

/// With the target empty, at-least-one and exactly-one solvability coincide:
/// each move delivers a single pebble, so the first arrival leaves exactly one.
inline CheckReport verify_first_arrival(const Graph& g, std::uint64_t t_max) {
  CheckReport report{"first_arrival"};
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    const VertexId target{v};
    GameSearch at_least(g, target, GoalMode::AtLeastOne);
    GameSearch exactly(g, target, GoalMode::ExactlyOne);
    for (std::uint64_t s = 0; s <= t_max; ++s) {
      detail::for_each_configuration(g.order(), s, TargetConstraint{target, 0}, [&](const Configuration& c) {
        ++report.cases;
        if (at_least.solvable(c) != exactly.solvable(c)) report.fail(detail::describe(g, c, target));
      });
    }
  }
  return report;
}

/// Differential check on one graph: the case-analysis solver agrees with
/// direct exactly-one search, and the potential prune never fires on an
/// at-least-one solvable configuration.
inline CheckReport crosscheck_graph(const Graph& g, std::uint64_t t_max) {
  CheckReport report{"crosscheck"};
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    const VertexId target{v};
    TargetSolver fast(g, target);
    GameSearch direct_exact(g, target, GoalMode::ExactlyOne);
    GameSearch direct_at_least(g, target, GoalMode::AtLeastOne);
    for (std::uint64_t s = 0; s <= t_max; ++s) {
      detail::for_each_configuration(g.order(), s, std::nullopt, [&](const Configuration& c) {
        ++report.cases;
        if (fast.exactly_one(c) != direct_exact.solvable(c)) {
          report.fail("fast path disagrees: " + detail::describe(g, c, target));
        }
        if (weight_prune(g, c, target) && direct_at_least.solvable(c)) {
          report.fail("prune fired on solvable: " + detail::describe(g, c, target));
        }
      });
    }
  }
  return report;
}

/// Connected graphs on 1..n_max vertices, in enumeration order.
inline std::vector<Graph> connected_graphs_up_to(std::uint32_t n_max, std::uint32_t n_min = 1) {
  std::vector<Graph> out;
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    auto level = enumerate_connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline CheckReport crosscheck_fast_path(std::uint32_t n_max = 4, std::uint64_t t_max = 8,
                                        unsigned jobs = 1) {
  CheckReport total{"crosscheck"};
  const auto graphs = connected_graphs_up_to(n_max);
  for (const auto& r : parallel_map(graphs, jobs, [&](const Graph& g) { return crosscheck_graph(g, t_max); })) {
    total.merge(r);
  }
  return total;
}

/// One graph's row in the theorem sweep.
struct GraphRecord {
  std::string graph6;
  std::uint32_t n = 0;
  std::optional<ExtendedCount> pi;    // empty when the computation errored
  std::optional<ExtendedCount> pi_s;
  bool equal = false;
  bool expected_exception = false;    // K2, where the two parameters differ
  std::optional<BlockingConfiguration> witness;  // blocking configuration of size pi - 1
  std::optional<ExtendedCount> windowed_pi_s;    // brute-force cross-check, when run
  std::optional<std::string> error;
  double elapsed_ms = 0;

  bool passes() const {
    if (error || !pi || !pi_s) return false;
    if (windowed_pi_s && *windowed_pi_s != *pi_s) return false;
    return expected_exception ? !equal : equal;
  }
};

struct VerifyOptions {
  std::uint32_t n_max = 5;
  std::uint64_t t_max = 8;
  std::uint64_t window = 4;
  std::uint32_t window_n_max = 4;     // graphs this small also get the windowed check
  std::uint32_t crosscheck_n_max = 4;
  std::uint32_t fact_n_max = 5;
  unsigned jobs = 1;
  bool run_fact_checks = true;
};

struct VerificationReport {
  std::string scope;
  std::vector<GraphRecord> records;
  std::vector<CheckReport> checks;
  double elapsed_ms = 0;

  std::size_t connected_classes() const {
    std::size_t count = 0;
    for (const auto& r : records)
      if (r.n >= 3) ++count;
    return count;
  }

  bool pass() const {
    for (const auto& r : records)
      if (!r.passes()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline GraphRecord evaluate_graph(const Graph& g, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  GraphRecord record;
  record.graph6 = encode_graph6(g);
  record.n = g.order();
  record.expected_exception = g == make_complete(2);
  try {
    record.pi = pebbling_number(g);
    record.pi_s = singular_pebbling_number(g);
    record.equal = *record.pi == *record.pi_s;
    if (record.pi->is_finite()) {
      record.witness = find_unsolvable_witness(g, record.pi->value() - 1, GoalMode::AtLeastOne);
    }
    if (g.order() >= 2 && g.order() <= options.window_n_max && is_connected(g)) {
      record.windowed_pi_s = windowed_singular_pebbling_number(g, options.window);
    }
  } catch (const limit_error& e) {
    record.error = e.what();
  }
  record.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

/// Both parameters for every connected class with 3 <= n <= n_max, preceded by
/// the two-vertex graphs: the disconnected one (both infinite) and K2 (the
/// known exception, 3 versus 2).
inline VerificationReport verify_theorem(const VerifyOptions& options) {
  if (options.n_max < 3 || options.n_max > kMaxEnumerationOrder) {
    throw usage_error("verify needs 3 <= n_max <= " + std::to_string(kMaxEnumerationOrder));
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> graphs{make_empty(2), make_complete(2)};
  for (const auto& g : connected_graphs_up_to(options.n_max, 3)) graphs.push_back(g);

  VerificationReport report;
  report.scope = "connected graphs with 3 <= n <= " + std::to_string(options.n_max) +
                 ", plus the two graphs on 2 vertices";
  report.records = parallel_map(graphs, options.jobs, [&](const Graph& g) { return evaluate_graph(g, options); });

  CheckReport theorem{"theorem"};
  for (const auto& r : report.records) {
    ++theorem.cases;
    if (!r.passes()) theorem.fail(r.graph6 + (r.error ? ": " + *r.error : ": parameters " + (r.equal ? std::string("equal") : "differ")));
  }
  report.checks.push_back(theorem);

  CheckReport window{"window"};
  for (const auto& r : report.records) {
    if (!r.windowed_pi_s) continue;
    ++window.cases;
    if (*r.windowed_pi_s != *r.pi_s) {
      window.fail(r.graph6 + ": reduced " + to_string(*r.pi_s) + ", windowed " + to_string(*r.windowed_pi_s));
    }
  }
  report.checks.push_back(window);

  if (options.run_fact_checks) {
    const auto fact_graphs = connected_graphs_up_to(std::min(options.n_max, options.fact_n_max), 2);
    auto per_graph = parallel_map(fact_graphs, options.jobs, [&](const Graph& g) {
      return std::vector<CheckReport>{verify_fact_1(g, options.t_max), verify_fact_3(g, options.t_max),
                                      verify_first_arrival(g, options.t_max)};
    });
    CheckReport f1{"fact_1"}, f3{"fact_3"}, arrival{"first_arrival"};
    for (const auto& reps : per_graph) {
      f1.merge(reps[0]);
      f3.merge(reps[1]);
      arrival.merge(reps[2]);
    }
    report.checks.push_back(f1);
    report.checks.push_back(f3);
    report.checks.push_back(arrival);
    report.checks.push_back(
        crosscheck_fast_path(std::min(options.n_max, options.crosscheck_n_max), options.t_max, options.jobs));
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pebbling
