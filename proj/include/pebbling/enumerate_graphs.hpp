#pragma once

#include <pebbling/errors.hpp>
#include <pebbling/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace pebbling {

/// Largest order for which isomorph-free enumeration is supported.
inline constexpr std::uint32_t kMaxEnumerationOrder = 7;

namespace detail {

// Upper-triangle adjacency bits in graph6 order, first bit most significant,
// for the relabelling where new vertex i is old vertex order[i].
inline std::uint64_t relabelled_code(const Graph& g, const std::vector<std::uint32_t>& order) {
  std::uint64_t code = 0;
  const auto n = static_cast<std::uint32_t>(order.size());
  for (std::uint32_t v = 1; v < n; ++v) {
    const Graph::Row row = g.row(order[v]);
    for (std::uint32_t u = 0; u < v; ++u) code = (code << 1) | ((row >> order[u]) & 1u);
  }
  return code;
}

inline Graph graph_from_code(std::uint32_t n, std::uint64_t code) {
  GraphBuilder b(n);
  const std::uint32_t bits = n * (n - 1) / 2;
  std::uint32_t k = 0;
  for (std::uint32_t v = 1; v < n; ++v) {
    for (std::uint32_t u = 0; u < v; ++u, ++k) {
      if ((code >> (bits - 1 - k)) & 1u) b.add_edge(u, v);
    }
  }
  return b.build();
}

}  // namespace detail

/// Canonical labelling by brute force: the maximum adjacency code over all
/// vertex orderings that list vertices by non-increasing degree. Degree is an
/// isomorphism invariant, so restricting to those orderings keeps the maximum
/// canonical while skipping most permutations.
struct CanonicalForm {
  std::uint64_t code = 0;
  std::vector<std::uint32_t> order;  // new label i is old vertex order[i]
};

inline CanonicalForm canonical_form(const Graph& g) {
  const std::uint32_t n = g.order();
  if (n > 11) throw usage_error("canonical form supports at most 11 vertices");

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return g.degree(a) > g.degree(b); });

  // Cells of equal degree; each is permuted independently.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    if (j - i > 1) cells.emplace_back(i, j);
    i = j;
  }

  CanonicalForm best{detail::relabelled_code(g, order), order};
  // Odometer over per-cell permutations; each cell starts sorted ascending.
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
  while (true) {
    const std::uint64_t code = detail::relabelled_code(g, order);
    if (code > best.code) best = {code, order};
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

/// The canonically relabelled copy of g.
inline Graph canonical_graph(const Graph& g) {
  return detail::graph_from_code(g.order(), canonical_form(g).code);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, ordered by (edge count, canonical code).
///
/// Built by vertex extension: every connected graph has a vertex whose removal
/// leaves it connected, so extending each class on n-1 vertices by a new vertex
/// with every nonempty neighbourhood reaches every class on n vertices.
inline std::vector<Graph> enumerate_connected_graphs(std::uint32_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw usage_error("connected graph enumeration supports 1 <= n <= " +
                      std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> level{make_complete(1)};
  for (std::uint32_t m = 2; m <= n; ++m) {
    std::set<std::pair<std::size_t, std::uint64_t>> seen;
    for (const Graph& base : level) {
      const auto base_edges = base.edges();
      for (std::uint64_t hood = 1; hood < (std::uint64_t{1} << (m - 1)); ++hood) {
        GraphBuilder b(m);
        for (auto [u, v] : base_edges) b.add_edge(u, v);
        for (std::uint32_t u = 0; u + 1 < m; ++u) {
          if ((hood >> u) & 1u) b.add_edge(u, m - 1);
        }
        const Graph g = b.build();
        seen.emplace(g.edge_count(), canonical_form(g).code);
      }
    }
    level.clear();
    for (auto [edges, code] : seen) level.push_back(detail::graph_from_code(m, code));
  }
  return level;
}

}  // namespace pebbling
