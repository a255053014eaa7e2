#pragma once

#include <pebbling/configuration.hpp>
#include <pebbling/errors.hpp>
#include <pebbling/extended_count.hpp>
#include <pebbling/graph.hpp>
#include <pebbling/search.hpp>

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

struct ParameterOptions {
  /// Largest t the ascending search may try; defaults to 4^n.
  std::optional<std::uint64_t> t_cap;
};

inline std::uint64_t default_t_cap(std::uint32_t n) {
  if (2 * n >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (2 * n);
}

namespace detail {

inline std::uint64_t resolve_cap(const Graph& g, const ParameterOptions& options) {
  return options.t_cap.value_or(default_t_cap(g.order()));
}

[[noreturn]] inline void cap_exceeded(const char* what, std::uint64_t cap) {
  throw limit_error(std::string(what) + ": search exceeded the cap t <= " + std::to_string(cap));
}

/// Every configuration of size t with `on_target` pebbles on the target
/// satisfies `pred`.
template <class Pred>
bool all_with_target_count(const Graph& g, VertexId target, std::uint64_t t, PebbleCount on_target,
                           Pred&& pred) {
  for (CompositionCursor cur(g.order(), t, TargetConstraint{target, on_target}); !cur.done(); cur.advance()) {
    auto s = cur.counts();
    if (!pred(Configuration(std::vector<PebbleCount>(s.begin(), s.end())))) return false;
  }
  return true;
}

inline std::vector<std::unique_ptr<TargetSolver>> target_solvers(const Graph& g) {
  std::vector<std::unique_ptr<TargetSolver>> out;
  for (std::uint32_t v = 0; v < g.order(); ++v) out.push_back(std::make_unique<TargetSolver>(g, VertexId{v}));
  return out;
}

}  // namespace detail

/// Least t such that every configuration of t pebbles can put a pebble on any
/// target. Configurations already holding a pebble on the target are solved
/// trivially, so only those with an empty target are searched. Adding a pebble
/// never hurts, which makes the ascent from t = 1 exact.
inline ExtendedCount pebbling_number(const Graph& g, const ParameterOptions& options = {}) {
  if (!is_connected(g)) return ExtendedCount::infinite();
  const std::uint64_t cap = detail::resolve_cap(g, options);
  auto solvers = detail::target_solvers(g);
  for (std::uint64_t t = 1;; ++t) {
    if (t > cap) detail::cap_exceeded("pebbling number", cap);
    bool all = true;
    for (auto& solver : solvers) {
      all = detail::all_with_target_count(g, solver->target(), t, 0,
                                          [&](const Configuration& c) { return solver->at_least_one(c); });
      if (!all) break;
    }
    if (all) return ExtendedCount::finite(t);
  }
}

/// Reduced test of whether every configuration of every size >= t is
/// exactly-one solvable for every target, on a connected graph with n >= 2.
///
/// Only two classes need searching. Configurations with 0 pebbles on the
/// target, and those with 2, stay solvable when a pebble is added off the
/// target (replay the same moves), so checking size t covers all larger sizes.
/// One pebble on the target is already solved; three or more always are.
/// The 2-on-target class starts at size 2, hence the max below.
inline bool singular_threshold_holds(const Graph& g, std::uint64_t t,
                                     std::vector<std::unique_ptr<TargetSolver>>& solvers) {
  for (auto& solver : solvers) {
    const bool empty_target_ok = detail::all_with_target_count(
        g, solver->target(), t, 0, [&](const Configuration& c) { return solver->at_least_one(c); });
    if (!empty_target_ok) return false;
    const bool pair_on_target_ok = detail::all_with_target_count(
        g, solver->target(), std::max<std::uint64_t>(t, 2), 2,
        [&](const Configuration& c) { return solver->exactly_one(c); });
    if (!pair_on_target_ok) return false;
  }
  return true;
}

/// Least t such that every configuration of at least t pebbles can leave
/// exactly one pebble on any target. Infinite on K1 (two or more pebbles on the
/// lone vertex can never become one) and on disconnected graphs.
inline ExtendedCount singular_pebbling_number(const Graph& g, const ParameterOptions& options = {}) {
  if (g.order() == 1 || !is_connected(g)) return ExtendedCount::infinite();
  const std::uint64_t cap = detail::resolve_cap(g, options);
  auto solvers = detail::target_solvers(g);
  for (std::uint64_t t = 1;; ++t) {
    if (t > cap) detail::cap_exceeded("singular pebbling number", cap);
    if (singular_threshold_holds(g, t, solvers)) return ExtendedCount::finite(t);
  }
}

/// A configuration of size t together with a target it cannot be solved for.
struct BlockingConfiguration {
  Configuration configuration;
  VertexId target;
};

/// First (target ascending, then configuration in enumeration order) size-t
/// configuration that is unsolvable under `mode`, if any.
inline std::optional<BlockingConfiguration> find_unsolvable_witness(const Graph& g, std::uint64_t t,
                                                                    GoalMode mode) {
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    TargetSolver solver(g, VertexId{v});
    for (CompositionCursor cur(g.order(), t); !cur.done(); cur.advance()) {
      auto s = cur.counts();
      Configuration c(std::vector<PebbleCount>(s.begin(), s.end()));
      if (!solver.solvable(c, mode)) return BlockingConfiguration{std::move(c), VertexId{v}};
    }
  }
  return std::nullopt;
}

/// Brute-force counterpart of singular_pebbling_number for connected graphs
/// with n >= 2: the least t such that every configuration of every size in
/// [t, t + window] is exactly-one solvable for every target, using direct
/// search with no case analysis. A gap of unsolvable sizes above the reduced
/// answer, or a run of window+1 solvable sizes below it, shows up as a
/// disagreement.
inline ExtendedCount windowed_singular_pebbling_number(const Graph& g, std::uint64_t window,
                                                       const ParameterOptions& options = {}) {
  if (g.order() < 2 || !is_connected(g)) {
    throw usage_error("windowed validation needs a connected graph on at least 2 vertices");
  }
  const std::uint64_t cap = detail::resolve_cap(g, options);
  std::vector<GameSearch> searches;
  for (std::uint32_t v = 0; v < g.order(); ++v) searches.emplace_back(g, VertexId{v}, GoalMode::ExactlyOne);

  auto size_ok = [&](std::uint64_t s) {
    for (auto& search : searches) {
      for (CompositionCursor cur(g.order(), s); !cur.done(); cur.advance()) {
        auto counts = cur.counts();
        if (!search.solvable(Configuration(std::vector<PebbleCount>(counts.begin(), counts.end())))) return false;
      }
    }
    return true;
  };

  std::uint64_t run_start = 1;
  for (std::uint64_t s = 1;; ++s) {
    if (run_start > cap) detail::cap_exceeded("windowed singular pebbling number", cap);
    if (!size_ok(s)) {
      run_start = s + 1;
      continue;
    }
    if (s - run_start == window) return ExtendedCount::finite(run_start);
  }
}

}  // namespace pebbling
