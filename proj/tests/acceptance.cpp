// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. `acceptance --extended` adds the 112-graph sweep on 6 vertices.

#include <pebbling/enumerate_graphs.hpp>
#include <pebbling/graph_io.hpp>
#include <pebbling/parameters.hpp>
#include <pebbling/report.hpp>
#include <pebbling/search.hpp>
#include <pebbling/verify.hpp>

#include "oracle.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace pebbling;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " (" << secs << " s)";
  if (!o.detail.empty()) line << " -- " << o.detail;
  std::cout << line.str() << std::endl;
}

const ExtendedCount kInf = ExtendedCount::infinite();
ExtendedCount F(std::uint64_t v) { return ExtendedCount::finite(v); }

std::string show(const ExtendedCount& c) { return to_string(c); }

}  // namespace

int main(int argc, char** argv) {
  const bool extended = argc > 1 && std::strcmp(argv[1], "--extended") == 0;
  VerificationReport sweep_jobs1;

  criterion(1, "exact values for K1, K2 and the disconnected 2-vertex graph, under 1 s", [] {
    Outcome o;
    const auto start = Clock::now();
    const Graph k1 = make_complete(1), k2 = make_complete(2), split = make_empty(2);
    o.require(pebbling_number(k1) == F(1), "pi(K1) = " + show(pebbling_number(k1)));
    o.require(singular_pebbling_number(k1) == kInf, "pi_s(K1) = " + show(singular_pebbling_number(k1)));
    o.require(pebbling_number(k2) == F(2), "pi(K2) = " + show(pebbling_number(k2)));
    o.require(singular_pebbling_number(k2) == F(3), "pi_s(K2) = " + show(singular_pebbling_number(k2)));
    o.require(pebbling_number(split) == kInf, "pi(2K1) finite");
    o.require(singular_pebbling_number(split) == kInf, "pi_s(2K1) finite");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    return o;
  });

  criterion(2, "pi_s = pi on all 29 connected classes with 3 <= n <= 5, under 300 s", [&] {
    Outcome o;
    const auto start = Clock::now();
    VerifyOptions options{.n_max = 5, .jobs = 1, .run_fact_checks = false};
    sweep_jobs1 = verify_theorem(options);
    std::size_t equal = 0;
    for (const auto& r : sweep_jobs1.records) {
      if (r.n < 3) continue;
      o.require(r.pi && r.pi_s && r.equal && r.pi->is_finite(),
                r.graph6 + ": pi " + (r.pi ? show(*r.pi) : "?") + " pi_s " + (r.pi_s ? show(*r.pi_s) : "?"));
      equal += r.equal;
    }
    o.require(sweep_jobs1.connected_classes() == 29, "classes " + std::to_string(sweep_jobs1.connected_classes()));
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(secs < 300.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(equal) + "/29 equal";
    return o;
  });

  if (extended) {
    criterion(2, "(extended) pi_s = pi on all 112 connected classes with n = 6", [] {
      Outcome o;
      std::size_t covered = 0;
      for (const Graph& g : enumerate_connected_graphs(6)) {
        const auto pi = pebbling_number(g), pi_s = singular_pebbling_number(g);
        o.require(pi == pi_s, encode_graph6(g) + ": pi " + show(pi) + " pi_s " + show(pi_s));
        ++covered;
      }
      o.require(covered == 112, "covered " + std::to_string(covered));
      return o;
    });
  }

  criterion(3, "reduced pi_s agrees with brute force over sizes [t, t+4] for connected n <= 4", [] {
    Outcome o;
    std::size_t graphs = 0;
    for (std::uint32_t n = 2; n <= 4; ++n) {
      for (const Graph& g : enumerate_connected_graphs(n)) {
        const auto reduced = singular_pebbling_number(g);
        const auto windowed = windowed_singular_pebbling_number(g, 4);
        o.require(reduced == windowed, encode_graph6(g) + ": reduced " + show(reduced) + " windowed " + show(windowed));
        ++graphs;
      }
    }
    o.detail = o.pass ? std::to_string(graphs) + " graphs" : o.detail;
    return o;
  });

  criterion(4, "fast path and potential prune agree with direct search for n <= 4, total <= 8", [] {
    Outcome o;
    const auto r = crosscheck_fast_path(4, 8);
    o.require(r.pass, r.counterexample.value_or(""));
    if (o.pass) o.detail = std::to_string(r.cases) + " cases";
    return o;
  });

  criterion(5, "fact checks and first-arrival property on connected n <= 5, t_max = 8", [] {
    Outcome o;
    CheckReport f1{"fact_1"}, f3{"fact_3"}, arrival{"first_arrival"};
    std::uint64_t triggered = 0;
    for (const Graph& g : connected_graphs_up_to(5)) {
      f1.merge(verify_fact_1(g, 8));
      if (g.order() >= 2) f3.merge(verify_fact_3(g, 8, &triggered));
      arrival.merge(verify_first_arrival(g, 8));
    }
    for (const auto* c : {&f1, &f3, &arrival}) o.require(c->pass, c->name + ": " + c->counterexample.value_or(""));
    o.require(triggered > 0, "fact 3 never triggered");
    if (o.pass) {
      o.detail = "fact_1 " + std::to_string(f1.cases) + ", fact_3 " + std::to_string(f3.cases) + " (" +
                 std::to_string(triggered) + " triggered), first_arrival " + std::to_string(arrival.cases);
    }
    return o;
  });

  criterion(6, "pi(P_n) = 2^(n-1) for n <= 5, pi(K_n) = n for n <= 6, pi(C5) = 5, matching the naive oracle", [] {
    Outcome o;
    auto check = [&](const Graph& g, std::uint64_t expected, const std::string& name) {
      const auto ours = pebbling_number(g);
      o.require(ours == F(expected), name + " = " + show(ours));
      o.require(oracle::pebbling_number(g) == expected, name + " oracle disagrees");
    };
    for (std::uint32_t n = 1; n <= 5; ++n) check(make_path(n), std::uint64_t{1} << (n - 1), "pi(P" + std::to_string(n) + ")");
    for (std::uint32_t n = 1; n <= 6; ++n) check(make_complete(n), n, "pi(K" + std::to_string(n) + ")");
    check(make_cycle(5), 5, "pi(C5)");
    return o;
  });

  criterion(7, "every witness replays to a goal; every blocking configuration is unsolvable", [&] {
    Outcome o;
    std::uint64_t witnesses = 0, blocking = 0;
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (const Graph& g : enumerate_connected_graphs(n)) {
        for (std::uint32_t v = 0; v < n; ++v) {
          for (GoalMode mode : {GoalMode::AtLeastOne, GoalMode::ExactlyOne}) {
            GameSearch search(g, VertexId{v}, mode, {.potential_prune = true});
            for (std::uint64_t t = 0; t <= 8; ++t) {
              for (const auto& c : enumerate_configurations(n, t)) {
                const auto r = search.solve(c);
                if (!r.solvable) continue;
                ++witnesses;
                o.require(r.witness && replay_reaches_goal(g, c, *r.witness, VertexId{v}, mode),
                          "witness fails: " + encode_graph6(g) + " " + format_configuration(c));
              }
            }
          }
        }
      }
    }
    // Blocking configurations from the sweep (size pi - 1) and for pi_s - 1.
    for (const auto& r : sweep_jobs1.records) {
      if (!r.witness) continue;
      const Graph g = parse_graph6(r.graph6);
      ++blocking;
      o.require(!solvable(g, r.witness->configuration, r.witness->target, GoalMode::AtLeastOne).solvable,
                "pi blocking configuration solvable on " + r.graph6);
      if (r.pi_s && r.pi_s->is_finite()) {
        const auto w = find_unsolvable_witness(g, r.pi_s->value() - 1, GoalMode::ExactlyOne);
        ++blocking;
        o.require(w && !solvable(g, w->configuration, w->target, GoalMode::ExactlyOne).solvable,
                  "pi_s blocking configuration missing or solvable on " + r.graph6);
      }
    }
    o.require(blocking > 0, "no blocking configurations checked");
    if (o.pass) o.detail = std::to_string(witnesses) + " witnesses, " + std::to_string(blocking) + " blocking";
    return o;
  });

  criterion(8, "verify JSON is byte-identical at 1 and 4 jobs", [] {
    Outcome o;
    VerifyOptions one{.n_max = 5, .jobs = 1};
    VerifyOptions four = one;
    four.jobs = 4;
    const std::string a = render_report(verify_theorem(one), {OutputFormat::Json, false});
    const std::string b = render_report(verify_theorem(four), {OutputFormat::Json, false});
    o.require(a == b, "reports differ");
    o.require(a.find("\"pass\": true") != std::string::npos, "report does not pass");
    if (o.pass) o.detail = std::to_string(a.size()) + " bytes";
    return o;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
