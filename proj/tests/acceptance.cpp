// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cak/cak.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cak;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* name, const std::function<Verdict()>& check) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.pass) ++failures;
  std::printf("%s %2d %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
}

std::string str(std::size_t x) { return std::to_string(x); }

Verdict oracle_equivalence() {
  const auto t0 = Clock::now();
  const double ps[] = {0.2, 0.5, 0.8};
  std::size_t mismatches = 0, runs = 0, forests = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 10;
    const auto g = gen_random(n, ps[i % 3], fixtures::color_mixes()[(i / 3) % 8], 100000 + i);
    const auto partition = nd_partition(g, false);
    if (!is_valid_partition(g, partition)) ++mismatches;
    const bool forest = g.all_gray() && is_forest(g, all_vertices(g));
    forests += forest ? 1 : 0;
    for (Player t : {Player::B, Player::W}) {
      const Player w = solve_naive(g, t).winner;
      bool same = solve_subset(g, t).winner == w && solve_vc(g, t).winner == w && solve_nd(g, t, partition).winner == w;
      if (forest) same = same && solve_tree(g, t).winner == w;
      mismatches += same ? 0 : 1;
      ++runs;
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 300.0,
          str(runs) + " runs (" + str(forests) + " gray forests), " + str(mismatches) + " disagreements, " +
              std::to_string(secs) + "s of 300s"};
}

Verdict gardner_parity() {
  const auto t0 = Clock::now();
  struct Board {
    std::size_t r, c;
    bool first_wins;
  };
  const Board boards[] = {{2, 2, false}, {2, 4, false}, {4, 4, false}, {2, 3, true}, {2, 5, true}, {4, 3, true}};
  std::string detail;
  bool ok = true;
  for (const auto& b : boards) {
    const auto out = solve_subset(gen_grid(b.r, b.c, GridVariant::Cram), Player::B);
    const bool first = out.winner == Player::B;
    ok = ok && first == b.first_wins;
    detail += str(b.r) + "x" + str(b.c) + "=" + (first ? "first " : "second ");
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 60.0, detail + "winner"};
}

Verdict tree_base_cases() {
  std::vector<std::size_t> ak, nk;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t a = 0, b = 0;
    for (const auto& t : oracle::all_labeled_trees(n))
      for (Vertex r = 0; r < n; ++r) {
        a = std::max(a, count_ak_subtrees(t, r));
        b = std::max(b, count_nk_subtrees(t, r));
      }
    ak.push_back(a);
    nk.push_back(b);
  }
  const std::vector<std::size_t> expect = {1, 1, 2, 3};
  auto fmt = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  return {ak == expect && nk == expect, "AK " + fmt(ak) + "; NK " + fmt(nk) + "; expected 1,1,2,3"};
}

Verdict tree_bound() {
  std::size_t violations = 0, checks = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 4 + i % 17;
    const auto t = gen_random_tree(n, 200000 + i);
    const double bound = std::pow(2.0, static_cast<double>(n) / 2.0) - 1.0;
    for (Vertex r = 0; r < n; ++r) {
      const double c = static_cast<double>(count_ak_subtrees(t, r));
      worst = std::max(worst, c / bound);
      violations += c > bound ? 1 : 0;
      ++checks;
    }
  }
  return {violations == 0, str(checks) + " rooted trees, " + str(violations) + " violations, max count/bound " +
                               std::to_string(worst)};
}

Verdict vc_state_space() {
  std::size_t violations = 0, instances = 0, max_tau = 0;
  for (std::uint64_t seed = 0; instances < 300 && seed < 5000; ++seed) {
    const std::size_t n = 4 + seed % 10;
    const double p = seed % 3 == 0 ? 0.15 : seed % 3 == 1 ? 0.3 : 0.5;
    const auto g = seed % 2 ? gen_random(n, p, fixtures::color_mixes()[seed % 8], 300000 + seed)
                            : fixtures::twin_heavy(1 + seed % 6, 3 + seed % 8, 300000 + seed, seed % 4 != 0);
    const auto cover = min_vertex_cover(g);
    if (cover.size() > 6) continue;
    ++instances;
    max_tau = std::max(max_tau, cover.size());
    const double s = static_cast<double>(cover.size());
    const double gamma = static_cast<double>(g.colors_used());
    const double bound = std::pow(3.0, s) * std::max(1.0, s * s) * std::pow(gamma + 1.0, s * s / 4.0);
    for (Player t : {Player::B, Player::W})
      if (static_cast<double>(count_vc_positions(g, t, cover).distinct_keys) > bound) ++violations;
  }
  return {violations == 0 && instances >= 300, str(instances) + " instances (tau <= " + str(max_tau) + "), " +
                                                   str(violations) + " violations"};
}

Verdict vc_lower_bound() {
  const auto t0 = Clock::now();
  const auto k2 = count_vc_positions(gen_lower_vc(2), Player::B);
  const auto k4 = count_vc_positions(gen_lower_vc(4), Player::B);
  const double secs = seconds_since(t0);
  return {k2.node_expansions >= 4 && k4.node_expansions >= 256 && secs < 600.0,
          "k=2: " + str(k2.node_expansions) + " >= 4; k=4: " + str(k4.node_expansions) + " >= 256 (" +
              str(k4.distinct_keys) + " keys)"};
}

Verdict nd_upper_bound() {
  std::size_t violations = 0, runs = 0, spot = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 11;
    ColoredGraph g;
    switch (seed % 4) {
      case 0: g = gen_random(n, 0.5, fixtures::color_mixes()[seed % 8], 400000 + seed); break;
      case 1: g = fixtures::twin_heavy(2 + seed % 3, n, 400000 + seed, seed % 8 == 1); break;
      case 2: g = gen_lower_nd(seed % 8 < 4 ? 1 : 3, 1 + seed % 3); break;
      default: g = fixtures::complete_bipartite(1 + seed % 4, 1 + seed % 5); break;
    }
    const auto p = nd_partition(g, false);
    const double bound = nd_key_bound(p);
    for (bool restrict : {false, true})
      for (Player t : {Player::B, Player::W}) {
        NdOptions opts;
        opts.restrict_clique_edges = restrict;
        opts.short_circuit = seed % 2 == 0;
        if (static_cast<double>(solve_nd(g, t, p, opts).stats.distinct_keys) > bound) ++violations;
        ++runs;
      }
    if (p.size() > 0) {
      const double nu = static_cast<double>(p.size());
      if (bound / 2.0 > std::pow(static_cast<double>(g.order()) / nu + 1.0, nu) * (1.0 + 1e-12)) ++violations;
      ++spot;
    }
  }
  return {violations == 0, str(runs) + " nd runs, " + str(spot) + " product checks, " + str(violations) + " violations"};
}

Verdict nd_lower_bound() {
  const auto s2 = count_nd_positions(gen_lower_nd(3, 2), Player::B, std::nullopt, true);
  const auto s3 = count_nd_positions(gen_lower_nd(3, 3), Player::B, std::nullopt, true);
  return {s2.distinct_keys >= 13 && s3.distinct_keys >= 32,
          "s=2: " + str(s2.distinct_keys) + " >= 13; s=3: " + str(s3.distinct_keys) + " >= 32"};
}

Verdict isomorphism_invariance() {
  std::mt19937_64 rng(500000);
  std::size_t bad = 0, checks = 0;
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::size_t i = 0; i < 100; ++i) {
    const auto g = gen_random(3 + i % 10, ps[i % 3], fixtures::color_mixes()[i % 8], 500000 + i);
    const Player wb = solve_subset(g, Player::B).winner, ww = solve_subset(g, Player::W).winner;
    for (int k = 0; k < 10; ++k) {
      const auto p = permute(g, fixtures::random_permutation(g.order(), rng));
      bad += solve_subset(p, Player::B).winner != wb;
      bad += solve_vc(p, Player::W).winner != ww;
      checks += 2;
    }
    const auto s = swap_colors(g);
    bad += solve_subset(s, Player::W).winner != opponent(wb);
    bad += solve_subset(s, Player::B).winner != opponent(ww);
    checks += 2;
  }
  return {bad == 0, str(checks) + " checks, " + str(bad) + " mismatches"};
}

Verdict grundy_consistency() {
  std::size_t bad = 0, checks = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 13;
    const auto f = seed % 2 ? gen_random_tree(n, 600000 + seed) : fixtures::random_forest(n, 600000 + seed);
    const auto value = grundy_tree(f).value;
    bad += grundy_naive(f).value != value;
    for (Player t : {Player::B, Player::W}) bad += (value > 0) != (solve_subset(f, t).winner == t);
    const auto other = gen_random_tree(1 + seed % 7, 700000 + seed);
    const auto u = disjoint_union(f, other);
    bad += grundy_tree(u).value != (value ^ grundy_tree(other).value);
    bad += grundy_naive(u).value != (grundy_naive(f).value ^ grundy_naive(other).value);
    checks += 5;
  }
  return {bad == 0, str(checks) + " checks over forests, " + str(bad) + " mismatches"};
}

}  // namespace

int main() {
  report(1, "oracle equivalence across engines", oracle_equivalence);
  report(2, "Cram parity", gardner_parity);
  report(3, "tree base cases R(1..4)", tree_base_cases);
  report(4, "AK-rooted subtree bound", tree_bound);
  report(5, "vc state-space bound", vc_state_space);
  report(6, "vc lower-bound recursion", vc_lower_bound);
  report(7, "nd key bound", nd_upper_bound);
  report(8, "nd lower-bound positions", nd_lower_bound);
  report(9, "isomorphism invariance", isomorphism_invariance);
  report(10, "Grundy consistency", grundy_consistency);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
