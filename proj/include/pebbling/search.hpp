#pragma once

#include <pebbling/configuration.hpp>
#include <pebbling/errors.hpp>
#include <pebbling/graph.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pebbling {

struct SolveResult {
  bool solvable = false;
  std::optional<std::vector<Move>> witness;  // present iff solvable
  std::uint64_t states_explored = 0;
};

struct SearchOptions {
  /// Skip states whose distance-weighted potential is below one pebble.
  bool potential_prune = false;
};

/// True when sum over v of counts[v] / 2^dist(v, target) is below 1, which
/// rules out ever placing a pebble on the target: a move from u to w changes
/// the potential by 2^-d(w) - 2 * 2^-d(u) <= 0 because d(w) >= d(u) - 1.
/// Vertices in other components contribute nothing.
inline bool weight_prune(const Graph& g, const Configuration& c, VertexId target) {
  check_sized_for(g, c);
  const auto dist = distances_from(g, target);
  std::uint32_t depth = 0;
  for (const auto& d : dist)
    if (d) depth = std::max(depth, *d);
  // Scale by 2^depth so every weight is an integer.
  unsigned __int128 potential = 0;
  const unsigned __int128 one = static_cast<unsigned __int128>(1) << depth;
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    if (!dist[v]) continue;
    potential += static_cast<unsigned __int128>(c.at(v)) << (depth - *dist[v]);
    if (potential >= one) return false;
  }
  return true;
}

namespace detail {

/// Memo key: 17 bits per vertex packed into 128 bits for graphs up to 7
/// vertices, the raw counts otherwise.
class StateMemo {
 public:
  static constexpr std::uint32_t kBitsPerVertex = 17;
  static constexpr std::uint32_t kPackedMaxOrder = 128 / kBitsPerVertex;

  explicit StateMemo(std::uint32_t n) : packed_(n <= kPackedMaxOrder) {}

  std::optional<bool> find(std::span<const PebbleCount> s) const {
    if (packed_) {
      auto it = small_.find(pack(s));
      if (it == small_.end()) return std::nullopt;
      return it->second;
    }
    auto it = large_.find(std::vector<PebbleCount>(s.begin(), s.end()));
    if (it == large_.end()) return std::nullopt;
    return it->second;
  }

  void store(std::span<const PebbleCount> s, bool value) {
    if (packed_) {
      small_[pack(s)] = value;
    } else {
      large_[std::vector<PebbleCount>(s.begin(), s.end())] = value;
    }
  }

  std::size_t size() const noexcept { return small_.size() + large_.size(); }
  void clear() {
    small_.clear();
    large_.clear();
  }

 private:
  using Packed = std::array<std::uint64_t, 2>;

  struct PackedHash {
    std::size_t operator()(const Packed& p) const noexcept {
      std::uint64_t h = p[0] * 0x9E3779B97F4A7C15ull;
      h ^= (p[1] + 0x632BE59BD9B4E019ull) + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };
  struct VectorHash {
    std::size_t operator()(const std::vector<PebbleCount>& v) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ull;
      for (PebbleCount x : v) h = (h ^ x) * 0x100000001b3ull;
      return static_cast<std::size_t>(h);
    }
  };

  static Packed pack(std::span<const PebbleCount> s) {
    unsigned __int128 acc = 0;
    for (PebbleCount x : s) acc = (acc << kBitsPerVertex) | x;
    return {static_cast<std::uint64_t>(acc), static_cast<std::uint64_t>(acc >> 64)};
  }

  bool packed_;
  std::unordered_map<Packed, bool, PackedHash> small_;
  std::unordered_map<std::vector<PebbleCount>, bool, VectorHash> large_;
};

}  // namespace detail

/// Memoized exhaustive search for one (graph, target, goal) triple. The memo
/// persists across solve() calls; every move lowers the pebble total by one, so
/// the state graph is acyclic and cached verdicts never go stale.
///
/// Moves are tried in ascending (source, destination) order and the witness is
/// the path that always takes the first child from which the goal is
/// reachable, so it does not depend on what the memo already holds.
class GameSearch {
 public:
  GameSearch(const Graph& g, VertexId target, GoalMode mode, SearchOptions options = {})
      : graph_(g), target_(target.index()), mode_(mode), options_(options), memo_(g.order()) {
    g.check_vertex(target);
    if (options_.potential_prune) {
      const auto dist = distances_from(g, target);
      for (const auto& d : dist)
        if (d) depth_ = std::max(depth_, *d);
      shift_.resize(g.order(), -1);
      for (std::uint32_t v = 0; v < g.order(); ++v)
        if (dist[v]) shift_[v] = static_cast<int>(depth_ - *dist[v]);
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  VertexId target() const noexcept { return VertexId{target_}; }
  GoalMode mode() const noexcept { return mode_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }
  void clear_memo() { memo_.clear(); }

  SolveResult solve(const Configuration& c) {
    check_sized_for(graph_, c);
    state_.assign(c.counts().begin(), c.counts().end());
    SolveResult result;
    if (goal()) {
      result.solvable = true;
      result.witness.emplace();
      return result;
    }
    if (pruned()) return result;
    if (auto known = memo_.find(state_)) {
      if (*known) {
        result.solvable = true;
        result.witness.emplace();
        extend_through_memo(*result.witness);
      }
      return result;
    }
    result.solvable = run(result);
    return result;
  }

  bool solvable(const Configuration& c) { return solve(c).solvable; }

 private:
  struct Frame {
    std::uint32_t source;
    Graph::Row pending;  // destinations not yet tried from `source`
    Move applied;        // move that produced this frame's state
  };

  bool goal() const {
    const PebbleCount on_target = state_[target_];
    return mode_ == GoalMode::AtLeastOne ? on_target >= 1 : on_target == 1;
  }

  bool pruned() const {
    if (!options_.potential_prune || state_[target_] != 0) return false;
    unsigned __int128 potential = 0;
    const unsigned __int128 one = static_cast<unsigned __int128>(1) << depth_;
    for (std::size_t v = 0; v < state_.size(); ++v) {
      if (shift_[v] < 0 || state_[v] == 0) continue;
      potential += static_cast<unsigned __int128>(state_[v]) << shift_[v];
      if (potential >= one) return false;
    }
    return true;
  }

  void apply(const Move& m) {
    state_[m.source.index()] -= 2;
    state_[m.destination.index()] += 1;
  }
  void undo(const Move& m) {
    state_[m.source.index()] += 2;
    state_[m.destination.index()] -= 1;
  }

  // Next untried move out of the frame's state, in deterministic order.
  std::optional<Move> next_move(Frame& f) const {
    const auto n = static_cast<std::uint32_t>(state_.size());
    while (true) {
      if (f.pending != 0) {
        const auto dest = static_cast<std::uint32_t>(std::countr_zero(f.pending));
        f.pending &= f.pending - 1;
        return Move{VertexId{f.source}, VertexId{dest}};
      }
      if (++f.source >= n) return std::nullopt;
      if (state_[f.source] >= 2) f.pending = graph_.row(f.source);
    }
  }

  Frame fresh_frame(Move applied) const {
    Frame f{0, 0, applied};
    if (state_[0] >= 2) f.pending = graph_.row(0);
    return f;
  }

  bool run(SolveResult& result) {
    std::vector<Frame> stack;
    stack.push_back(fresh_frame(Move{}));
    ++result.states_explored;

    while (!stack.empty()) {
      auto move = next_move(stack.back());
      if (!move) {
        memo_.store(state_, false);
        const Move back = stack.back().applied;
        stack.pop_back();
        if (!stack.empty()) undo(back);
        continue;
      }
      apply(*move);
      bool reached = goal();
      if (!reached && !pruned()) {
        if (auto known = memo_.find(state_)) {
          reached = *known;
        } else {
          stack.push_back(fresh_frame(*move));
          ++result.states_explored;
          continue;
        }
      }
      if (!reached) {
        undo(*move);
        continue;
      }
      // Success: the stack spells out the path.
      std::vector<Move> path;
      for (std::size_t i = 1; i < stack.size(); ++i) path.push_back(stack[i].applied);
      path.push_back(*move);
      extend_through_memo(path);
      // Rewind to the root, marking every state on the path as solvable.
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        undo(*it);
        memo_.store(state_, true);
      }
      result.witness = std::move(path);
      return true;
    }
    return false;
  }

  // From a state the memo marks solvable, follow first solvable children to a
  // goal state, appending moves to path. Leaves state_ at the goal.
  void extend_through_memo(std::vector<Move>& path) {
    while (!goal()) {
      Frame f = fresh_frame(Move{});
      bool advanced = false;
      while (auto move = next_move(f)) {
        apply(*move);
        if (goal() || (!pruned() && memo_.find(state_).value_or(false))) {
          path.push_back(*move);
          advanced = true;
          break;
        }
        undo(*move);
      }
      if (!advanced) throw std::logic_error("search memo marks a dead-end state as solvable");
    }
  }

  const Graph& graph_;
  std::uint32_t target_;
  GoalMode mode_;
  SearchOptions options_;
  detail::StateMemo memo_;
  std::vector<PebbleCount> state_;
  std::uint32_t depth_ = 0;
  std::vector<int> shift_;
};

/// Direct state-space search; the memo lives for this call only.
inline SolveResult solvable(const Graph& g, const Configuration& c, VertexId target, GoalMode mode,
                            SearchOptions options = {}) {
  check_sized_for(g, c);
  g.check_vertex(target);
  GameSearch search(g, target, mode, options);
  return search.solve(c);
}

/// Replays moves from c; true iff every step is legal and the final state
/// satisfies the goal.
inline bool replay_reaches_goal(const Graph& g, Configuration c, const std::vector<Move>& moves,
                                VertexId target, GoalMode mode) {
  for (const Move& m : moves) {
    if (!is_legal(g, c, m)) return false;
    c = apply_move(g, c, m);
  }
  return is_goal(c, target, mode);
}

/// Exactly-one solvability for a fixed (graph, target) by case analysis on the
/// number of pebbles already on the target:
///   1          solved without moving
///   isolated   nothing can ever arrive or leave, so anything but 1 fails
///   >= 3       move all but one (odd) or all (even) to a neighbour, which then
///              holds at least 2 and can send one back
///   0          the first pebble to arrive is exactly one, so this is plain
///              at-least-one reachability
///   2          full search
class TargetSolver {
 public:
  TargetSolver(const Graph& g, VertexId target)
      : graph_(g),
        target_(target),
        at_least_one_(g, target, GoalMode::AtLeastOne, SearchOptions{.potential_prune = true}),
        exactly_one_(g, target, GoalMode::ExactlyOne, SearchOptions{.potential_prune = true}) {}

  VertexId target() const noexcept { return target_; }

  bool at_least_one(const Configuration& c) { return at_least_one_.solvable(c); }

  bool exactly_one(const Configuration& c) {
    const PebbleCount on_target = c[target_];
    if (on_target == 1) return true;
    if (is_isolated(graph_, target_)) return false;
    if (on_target >= 3) return true;
    if (on_target == 0) return at_least_one_.solvable(c);
    return exactly_one_.solvable(c);
  }

  bool solvable(const Configuration& c, GoalMode mode) {
    return mode == GoalMode::AtLeastOne ? at_least_one(c) : exactly_one(c);
  }

 private:
  const Graph& graph_;
  VertexId target_;
  GameSearch at_least_one_;
  GameSearch exactly_one_;
};

inline bool solvable_exactly_one_fast(const Graph& g, const Configuration& c, VertexId target) {
  check_sized_for(g, c);
  g.check_vertex(target);
  TargetSolver solver(g, target);
  return solver.exactly_one(c);
}

}  // namespace pebbling
