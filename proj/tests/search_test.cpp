#include <pebbling/enumerate_graphs.hpp>
#include <pebbling/search.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

namespace pebbling {
namespace {

Configuration cfg(std::vector<PebbleCount> counts) { return Configuration(std::move(counts)); }

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(const std::vector<Move>& moves) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& m : moves) out.emplace_back(m.source.index(), m.destination.index());
  return out;
}
using P = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

TEST(Solvable, Examples) {
  const Graph k2 = make_complete(2), p3 = make_path(3);

  auto r = solvable(k2, cfg({0, 2}), VertexId{0}, GoalMode::AtLeastOne);
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(pairs(*r.witness), (P{{1, 0}}));

  r = solvable(k2, cfg({2, 0}), VertexId{0}, GoalMode::ExactlyOne);
  EXPECT_FALSE(r.solvable);
  EXPECT_FALSE(r.witness);

  r = solvable(p3, cfg({0, 0, 4}), VertexId{0}, GoalMode::AtLeastOne);
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(pairs(*r.witness), (P{{2, 1}, {2, 1}, {1, 0}}));

  r = solvable(k2, cfg({4, 0}), VertexId{0}, GoalMode::ExactlyOne);
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(pairs(*r.witness), (P{{0, 1}, {0, 1}, {1, 0}}));
}

TEST(Solvable, ZeroMoveWinAndDegenerateInputs) {
  const Graph k1 = make_complete(1);
  auto r = solvable(k1, cfg({1}), VertexId{0}, GoalMode::ExactlyOne);
  EXPECT_TRUE(r.solvable);
  EXPECT_TRUE(r.witness->empty());
  EXPECT_FALSE(solvable(k1, cfg({0}), VertexId{0}, GoalMode::AtLeastOne).solvable);
  EXPECT_FALSE(solvable(k1, cfg({2}), VertexId{0}, GoalMode::ExactlyOne).solvable);
  for (std::uint32_t v = 0; v < 4; ++v) {
    EXPECT_FALSE(solvable(make_cycle(4), cfg({0, 0, 0, 0}), VertexId{v}, GoalMode::AtLeastOne).solvable);
    EXPECT_FALSE(solvable(make_cycle(4), cfg({0, 0, 0, 0}), VertexId{v}, GoalMode::ExactlyOne).solvable);
  }
}

TEST(Solvable, UsageErrors) {
  EXPECT_THROW(solvable(make_path(3), cfg({1, 2}), VertexId{0}, GoalMode::AtLeastOne), usage_error);
  EXPECT_THROW(solvable(make_path(3), cfg({1, 2, 0}), VertexId{3}, GoalMode::AtLeastOne), usage_error);
}

TEST(Solvable, LargeTotalsDoNotOverflowTheStack) {
  // Depth grows with the pebble total; the search is iterative.
  const Graph p2 = make_path(2);
  auto r = solvable(p2, cfg({40000, 0}), VertexId{0}, GoalMode::ExactlyOne);
  EXPECT_TRUE(r.solvable);
  EXPECT_GT(r.witness->size(), 20000u);
  EXPECT_TRUE(replay_reaches_goal(p2, cfg({40000, 0}), *r.witness, VertexId{0}, GoalMode::ExactlyOne));
}

TEST(WeightPrune, Examples) {
  const Graph p3 = make_path(3);
  EXPECT_TRUE(weight_prune(p3, cfg({0, 0, 3}), VertexId{0}));
  EXPECT_FALSE(weight_prune(p3, cfg({0, 0, 4}), VertexId{0}));
  const Graph split(3, {{0, 1}});
  EXPECT_TRUE(weight_prune(split, cfg({0, 0, 100}), VertexId{0}));
  EXPECT_FALSE(weight_prune(split, cfg({0, 2, 100}), VertexId{0}));
  EXPECT_FALSE(weight_prune(p3, cfg({1, 0, 0}), VertexId{0}));
}

TEST(FastPath, Examples) {
  EXPECT_TRUE(solvable_exactly_one_fast(make_path(4), cfg({0, 1, 0, 0}), VertexId{1}));
  EXPECT_FALSE(solvable_exactly_one_fast(make_complete(1), cfg({2}), VertexId{0}));
  EXPECT_TRUE(solvable_exactly_one_fast(make_complete(2), cfg({3, 0}), VertexId{0}));
  EXPECT_FALSE(solvable_exactly_one_fast(make_complete(2), cfg({2, 0}), VertexId{0}));
  EXPECT_FALSE(solvable_exactly_one_fast(make_empty(2), cfg({5, 9}), VertexId{0}));
}

// Differential test of the search kernel against the naive recursive oracle,
// and witness replay for every solvable instance.
TEST(Solvable, MatchesNaiveOracleAndWitnessesReplay) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      for (std::uint32_t v = 0; v < n; ++v) {
        for (GoalMode mode : {GoalMode::AtLeastOne, GoalMode::ExactlyOne}) {
          oracle::NaiveGame naive(g, v, mode == GoalMode::AtLeastOne ? oracle::Goal::AtLeastOne
                                                                   : oracle::Goal::ExactlyOne);
          GameSearch shared(g, VertexId{v}, mode, {.potential_prune = true});
          for (std::uint64_t t = 0; t <= 7; ++t) {
            for (const auto& c : enumerate_configurations(n, t)) {
              const auto fresh = solvable(g, c, VertexId{v}, mode);
              const bool expected = naive.solvable(oracle::Counts(c.counts().begin(), c.counts().end()));
              ASSERT_EQ(fresh.solvable, expected);
              const auto cached = shared.solve(c);
              ASSERT_EQ(cached.solvable, expected);
              if (expected) {
                ASSERT_TRUE(replay_reaches_goal(g, c, *fresh.witness, VertexId{v}, mode));
                ASSERT_EQ(pairs(*cached.witness), pairs(*fresh.witness)) << "witness independent of memo";
              }
            }
          }
        }
      }
    }
  }
}

// Adding a pebble off the target keeps exactly-one solvability; adding one
// anywhere keeps at-least-one solvability.
TEST(Solvable, MonotonicityProperties) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      for (std::uint32_t v = 0; v < n; ++v) {
        GameSearch exact(g, VertexId{v}, GoalMode::ExactlyOne);
        GameSearch at_least(g, VertexId{v}, GoalMode::AtLeastOne);
        for (std::uint64_t t = 0; t <= 6; ++t) {
          for (const auto& c : enumerate_configurations(n, t)) {
            const bool e = exact.solvable(c), a = at_least.solvable(c);
            for (std::uint32_t u = 0; u < n; ++u) {
              const auto bigger = c.with_added(VertexId{u});
              if (a) {
                ASSERT_TRUE(at_least.solvable(bigger));
              }
              if (e && u != v) {
                ASSERT_TRUE(exact.solvable(bigger));
              }
            }
          }
        }
      }
    }
  }
}

TEST(Solvable, StatesExploredIsReported) {
  const auto r = solvable(make_path(4), cfg({0, 0, 0, 7}), VertexId{0}, GoalMode::AtLeastOne);
  EXPECT_FALSE(r.solvable);
  EXPECT_GT(r.states_explored, 1u);
  const auto pruned =
      solvable(make_path(4), cfg({0, 0, 0, 7}), VertexId{0}, GoalMode::AtLeastOne, {.potential_prune = true});
  EXPECT_FALSE(pruned.solvable);
  EXPECT_EQ(pruned.states_explored, 0u);
}

}  // namespace
}  // namespace pebbling
