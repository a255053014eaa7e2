#pragma once

#include <pebbling/errors.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

/// Stable 0-based vertex label.
class VertexId {
 public:
  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const noexcept { return index_; }

  friend constexpr auto operator<=>(VertexId, VertexId) = default;

 private:
  std::uint32_t index_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency bitmask
/// per vertex. Immutable once built.
class Graph {
 public:
  static constexpr std::uint32_t kMaxVertices = 64;
  using Row = std::uint64_t;

  explicit Graph(std::uint32_t n) : rows_(check_order(n), 0) {}

  Graph(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
      : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(rows_.size()); }

  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
  }
  bool adjacent(VertexId u, VertexId v) const { return adjacent(u.index(), v.index()); }

  Row row(std::uint32_t v) const {
    check_vertex(v);
    return rows_[v];
  }

  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(std::popcount(row(v)));
  }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (Row r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
    return twice / 2;
  }

  /// Edges (u, v) with u < v in ascending order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < order(); ++u) {
      for (std::uint32_t v = u + 1; v < order(); ++v) {
        if ((rows_[u] >> v) & 1u) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void check_vertex(std::uint32_t v) const {
    if (v >= order()) {
      throw usage_error("vertex " + std::to_string(v) + " out of range for graph on " +
                        std::to_string(order()) + " vertices");
    }
  }
  void check_vertex(VertexId v) const { check_vertex(v.index()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  static std::uint32_t check_order(std::uint32_t n) {
    if (n < 1 || n > kMaxVertices) {
      throw usage_error("graph order must be in [1, " + std::to_string(kMaxVertices) +
                        "], got " + std::to_string(n));
    }
    return n;
  }

  void add_edge(std::uint32_t u, std::uint32_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw usage_error("self-loop at vertex " + std::to_string(u));
    rows_[u] |= Row{1} << v;
    rows_[v] |= Row{1} << u;
  }

  std::vector<Row> rows_;
};

/// Mutable staging area for a Graph; rejects loops and duplicate edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::uint32_t n) : graph_(n) {}

  GraphBuilder& add_edge(std::uint32_t u, std::uint32_t v) {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    if (u == v) throw usage_error("self-loop at vertex " + std::to_string(u));
    if (graph_.adjacent(u, v)) {
      throw usage_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    graph_.add_edge(u, v);
    return *this;
  }

  /// Idempotent variant used by generators that may revisit an edge.
  GraphBuilder& set_edge(std::uint32_t u, std::uint32_t v) {
    graph_.add_edge(u, v);
    return *this;
  }

  Graph build() const { return graph_; }

 private:
  Graph graph_;
};

/// Ascending list of neighbours of v.
inline std::vector<VertexId> neighbors(const Graph& g, VertexId v) {
  std::vector<VertexId> out;
  for (Graph::Row r = g.row(v.index()); r != 0; r &= r - 1) {
    out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(r)));
  }
  return out;
}

inline std::uint32_t min_degree(const Graph& g) {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline bool is_isolated(const Graph& g, VertexId v) { return g.row(v.index()) == 0; }

/// Vertices reachable from v, as a bitmask.
inline Graph::Row component_mask(const Graph& g, VertexId v) {
  g.check_vertex(v);
  Graph::Row seen = Graph::Row{1} << v.index();
  Graph::Row frontier = seen;
  while (frontier != 0) {
    Graph::Row next = 0;
    for (Graph::Row f = frontier; f != 0; f &= f - 1) {
      next |= g.row(static_cast<std::uint32_t>(std::countr_zero(f)));
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

/// K1 counts as connected.
inline bool is_connected(const Graph& g) {
  return std::popcount(component_mask(g, VertexId{0})) == static_cast<int>(g.order());
}

/// BFS distances; std::nullopt marks vertices in other components.
inline std::vector<std::optional<std::uint32_t>> distances_from(const Graph& g, VertexId v) {
  g.check_vertex(v);
  std::vector<std::optional<std::uint32_t>> dist(g.order());
  dist[v.index()] = 0;
  Graph::Row seen = Graph::Row{1} << v.index();
  Graph::Row frontier = seen;
  std::uint32_t level = 0;
  while (frontier != 0) {
    ++level;
    Graph::Row next = 0;
    for (Graph::Row f = frontier; f != 0; f &= f - 1) {
      next |= g.row(static_cast<std::uint32_t>(std::countr_zero(f)));
    }
    frontier = next & ~seen;
    seen |= frontier;
    for (Graph::Row f = frontier; f != 0; f &= f - 1) dist[std::countr_zero(f)] = level;
  }
  return dist;
}

// Standard families.

inline Graph make_complete(std::uint32_t n) {
  if (n < 1) throw usage_error("complete graph needs n >= 1");
  GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph make_path(std::uint32_t n) {
  if (n < 1) throw usage_error("path needs n >= 1");
  GraphBuilder b(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

inline Graph make_cycle(std::uint32_t n) {
  if (n < 3) throw usage_error("cycle needs n >= 3");
  GraphBuilder b(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  b.add_edge(n - 1, 0);
  return b.build();
}

/// Star centred at vertex 0.
inline Graph make_star(std::uint32_t n) {
  if (n < 2) throw usage_error("star needs n >= 2");
  GraphBuilder b(n);
  for (std::uint32_t i = 1; i < n; ++i) b.add_edge(0, i);
  return b.build();
}

/// Graph on n vertices with no edges.
inline Graph make_empty(std::uint32_t n) { return Graph(n); }

}  // namespace pebbling
