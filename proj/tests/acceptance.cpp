// Copyright 2026 The histk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks AC1-AC9. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. All tolerances and runtime limits are fixed
// here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "histk/certificates.hpp"
#include "histk/constants.hpp"
#include "histk/constructive.hpp"
#include "histk/families.hpp"
#include "histk/forest.hpp"
#include "histk/graph.hpp"
#include "histk/graph_io.hpp"
#include "histk/hypothesis.hpp"
#include "histk/testing/naive_enumeration.hpp"
#include "histk/trace.hpp"

namespace {

using namespace histk;

constexpr double kIdentityRelTol = 1e-9;
constexpr std::uint64_t kExactBudget = 100'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

bool run(const char* id, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.pass && limit_seconds > 0 && secs > limit_seconds) {
    o.pass = false;
    o.detail = "runtime limit exceeded";
  }
  std::printf("%s %s (%.2fs%s%s)\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.empty() ? "" : "; ",
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

const InequalityCheck* find_check(const InequalityReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool check_holds(const InequalityReport& r, const std::string& name) {
  const InequalityCheck* c = find_check(r, name);
  return c != nullptr && c->holds;
}

int ceil_two_sqrt(Vertex n) {
  int d = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
  while (d > 0 && static_cast<std::int64_t>(d - 1) * (d - 1) >= 4LL * n) --d;
  while (static_cast<std::int64_t>(d) * d < 4LL * n) ++d;
  return d;
}

// Smallest integer floor with floor >= c_k sqrt(n) + extra.
int c_sqrt_floor(int k, Vertex n, int extra) {
  int d = extra;
  while (compare_with_c_sqrt(d - extra, 1, k, n) < 0) ++d;
  return d;
}

Outcome ac1() {
  Outcome o;
  const Constants c = constants(2);
  o.require(c.c == 4.0, "c_2 != 4");
  o.require(c.n0 == 295, "n0(2) != 295");
  o.require(c.n1 == 1091, "n1(2) != 1091");
  o.require(n0_condition(2, 295) && !n0_condition(2, 294), "n0 boundary not at 294/295");
  o.require(n1_condition(2, 1091) && !n1_condition(2, 1090), "n1 boundary not at 1090/1091");
  return o;
}

Outcome ac2() {
  Outcome o;
  for (std::int64_t n = 295; n <= 400; n += 5) {
    o.require(check_holds(verify_constant_inequalities(2, n), "n0_bound"), "n0 bound fails at " + std::to_string(n));
  }
  for (std::int64_t n = 1091; n <= 1300; n += 11) {
    const InequalityReport r = verify_constant_inequalities(2, n);
    for (const char* name : {"n1_bound", "n1_chain", "n1_floor"}) {
      o.require(check_holds(r, name), std::string(name) + " fails at " + std::to_string(n));
    }
  }
  for (int k = 2; k <= 6; ++k) {
    const InequalityReport r = verify_constant_inequalities(k, constants(k).n1);
    const InequalityCheck* m1 = find_check(r, "pk_margin");
    const InequalityCheck* m2 = find_check(r, "pk_ratio");
    const InequalityCheck* m3 = find_check(r, "pk_identity");
    o.require(m1 && m1->holds && m1->lhs > 0, "pk_margin not strict at k=" + std::to_string(k));
    o.require(m2 && m2->holds && m2->lhs > 0, "pk_ratio not strict at k=" + std::to_string(k));
    o.require(m3 && std::fabs(m3->lhs - m3->rhs) <= kIdentityRelTol * m3->rhs,
              "pk_identity off at k=" + std::to_string(k));
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  for (Vertex n : {9, 12, 20, 300}) {
    FamilyParams p;
    p.k = 2;
    p.sizes = {1, 1, 1, n - 3};
    const LFamilyInstance inst = gen_L_family(p);
    const std::string at = " at n=" + std::to_string(n);
    o.require(degree_profile(inst.graph).sigma2 == ExtendedInt(n - 2), "sigma2 != n-2" + at);
    o.require(is_k_blocking_set(inst.graph, 2, inst.partition.parts[1]), "L2 not 2-blocking" + at);
    if (n <= 12) {
      o.require(decide_2k_st_exact(inst.graph, 2, kExactBudget).outcome == ExactOutcome::kNone,
                "exact search did not refute" + at);
    }
    if (n == 300) {
      const PipelineResult r = construct_sigma2(inst.graph, 2, SigmaBound::kNMinus2, Mode::kStrict);
      o.require(r.outcome == histk::Outcome::kObstruction && r.obstruction && r.obstruction->partition,
                "pipeline did not return the four-part obstruction");
      if (r.obstruction && r.obstruction->partition) {
        o.require(!validate_L_partition(inst.graph, 2, *r.obstruction->partition).has_value(),
                  "recovered partition invalid");
      }
    }
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  const GPrimeInstance inst = gen_Gprime(2, 13);
  const Vertex n = inst.graph.order();
  o.require(degree_profile(inst.graph).sigma2 == ExtendedInt(7), "sigma2 != 7");
  o.require((n + 2 * 2 - 3) / 2 == 7, "order mismatch");
  o.require(!find_k_blocking_set(inst.graph, 2, n).has_value(), "2-blocking set found");
  const ExactResult r = decide_2k_st_exact(inst.graph, 2, kExactBudget);
  o.require(r.outcome == ExactOutcome::kNone, std::string("exact search gave ") + std::string(to_string(r.outcome)));
  return o;
}

Outcome ac5() {
  Outcome o;
  std::mt19937_64 rng(20260501);
  int held = 0, with_cuts = 0;
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t seed = rng();
    const Vertex n = static_cast<Vertex>(16 + seed % 185);
    const int floor = ceil_two_sqrt(n);
    Graph g;
    // Block graphs need room for two blocks per component to have cut vertices.
    const int room = n / (2 * (floor + 2));
    const int parts = std::min(1 + static_cast<int>(seed % 3), room);
    if (i % 2 == 0 || parts == 0) {
      g = gen_min_degree_graph(n, floor, seed);
    } else {
      g = gen_block_graph(n, floor + 2, parts, seed);
    }
    o.require(g.min_degree() >= floor, "generator missed the degree floor");
    const CutCompoBound b = check_cut_compo_bound(g);
    o.require(b.holds, "violation at seed " + std::to_string(seed));
    held += b.holds;
    with_cuts += b.cut > 0;
  }
  o.require(held == 500, std::to_string(held) + "/500 hold");
  o.require(with_cuts > 0, "no instance had a cut vertex");
  if (o.pass) o.detail = "500/500 hold, " + std::to_string(with_cuts) + " with cut vertices";
  return o;
}

Outcome ac6() {
  Outcome o;
  const int k = 2;
  std::mt19937_64 rng(20260602);
  int peel_ok = 0, forest_ok = 0, tree_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = rng();
    const Vertex n = static_cast<Vertex>(60 + seed % 341);
    const int t = 1 + static_cast<int>((seed >> 12) % 3);
    std::vector<Vertex> u;
    for (int j = 0; j < t; ++j) u.push_back(static_cast<Vertex>((seed >> 20) % n + j * 7) % n);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    const int tu = static_cast<int>(u.size());
    SurrogateOptions opts;
    opts.seed = seed;

    // Peeling: delta >= 2 sqrt(n) + m + |Y| with m = k, Y = the other roots.
    {
      const std::vector<Vertex> y(u.begin() + 1, u.end());
      const int floor = ceil_two_sqrt(n) + k + static_cast<int>(y.size());
      const Graph g = i % 2 == 0 ? gen_min_degree_graph(n, floor, seed) : gen_block_graph(n, floor + 2, 1, seed);
      const std::vector<Vertex> x = peel_neighbors(g, u[0], y, k);
      bool ok = static_cast<int>(x.size()) == k && is_connected(remove_vertices(g, x).graph);
      for (Vertex v : x) ok = ok && g.has_edge(u[0], v) && !std::binary_search(y.begin(), y.end(), v);
      peel_ok += ok;
    }
    // Good forest: delta >= c sqrt(n) + (k+1)|U| - 1.
    {
      const Graph g = gen_min_degree_graph(n, c_sqrt_floor(k, n, (k + 1) * tu - 1), seed + 1);
      const Construction c = build_good_forest(g, k, u, Mode::kStrict, opts);
      const SpanningForest f(g, c.edges);
      forest_ok += f.component_count() == u.size() && verify_good_forest(f, k, u);
    }
    // Good tree: delta >= c sqrt(n) + k|U| - 1.
    {
      const Graph g = gen_min_degree_graph(n, c_sqrt_floor(k, n, k * tu - 1), seed + 2);
      const Construction c = build_good_tree(g, k, u, Mode::kStrict, opts);
      tree_ok += verify_good_tree(SpanningForest(g, c.edges), GoodnessSpec{k, u});
    }
  }
  o.require(peel_ok == 100, "peel " + std::to_string(peel_ok) + "/100");
  o.require(forest_ok == 100, "good forest " + std::to_string(forest_ok) + "/100");
  o.require(tree_ok == 100, "good tree " + std::to_string(tree_ok) + "/100");
  return o;
}

Outcome ac7() {
  Outcome o;
  const int k = 2;
  auto check = [&](HypothesisKind kind, Vertex base, int count, std::uint64_t seed0) {
    int ok = 0;
    for (int i = 0; i < count; ++i) {
      const Vertex n = base + static_cast<Vertex>(i % 5);
      const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
      const Graph g = gen_random_hypothesis(kind, k, n, seed);
      const DegreeProfile p = degree_profile(g);
      if (!check_hypothesis(g, p, kind, k).holds) continue;
      if (kind == HypothesisKind::kSigma2NMinus2 && recognize_L_family(g, k)) continue;
      if (kind == HypothesisKind::kSigma2Half && find_k_blocking_set(g, k, default_blocking_cap(k))) continue;
      SurrogateOptions opts;
      opts.seed = seed;
      PipelineResult r;
      if (kind == HypothesisKind::kPi2) {
        r = construct_pi2(g, k, Mode::kStrict, opts);
      } else {
        const SigmaBound b = kind == HypothesisKind::kSigma2Half ? SigmaBound::kHalf : SigmaBound::kNMinus2;
        r = construct_sigma2(g, k, b, Mode::kStrict, opts);
      }
      ok += r.outcome == histk::Outcome::kWitness && verify_2k_st(SpanningForest(g, r.tree), k);
    }
    return ok;
  };
  const int a = check(HypothesisKind::kSigma2NMinus2, 298, 20, 700);
  const int b = check(HypothesisKind::kSigma2Half, 1098, 10, 800);
  const int c = check(HypothesisKind::kPi2, 198, 10, 900);
  o.require(a == 20, "sum n-2: " + std::to_string(a) + "/20");
  o.require(b == 10, "sum half: " + std::to_string(b) + "/10");
  o.require(c == 10, "product: " + std::to_string(c) + "/10");
  return o;
}

void agree(Outcome& o, const Graph& g, int k, int& checks) {
  const ExactResult exact = decide_2k_st_exact(g, k, kExactBudget);
  const bool naive = testing::naive_find_2k_st(g, k).has_value();
  o.require(exact.outcome != ExactOutcome::kBudgetExhausted, "budget exhausted");
  o.require((exact.outcome == ExactOutcome::kWitness) == naive, "exact and naive disagree");
  if (find_k_blocking_set(g, k, g.order())) o.require(!naive, "blocked graph has a tree");
  ++checks;
}

Outcome ac8() {
  Outcome o;
  int checks = 0;
  // Every connected labelled graph on up to 6 vertices.
  for (Vertex n = 2; n <= 6; ++n) {
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    for (std::uint64_t mask = 0; mask < (1ULL << all.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1) e.push_back(all[i]);
      }
      const Graph g = build_graph(n, e);
      if (!is_connected(g)) continue;
      for (int k : {2, 3}) agree(o, g, k, checks);
    }
  }
  // Random sweep on 7..9 vertices.
  std::mt19937_64 rng(20260808);
  for (int i = 0; i < 6000; ++i) {
    const Vertex n = static_cast<Vertex>(7 + rng() % 3);
    const double p = 0.1 + 0.8 * std::uniform_real_distribution<double>(0, 1)(rng);
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) e.push_back(make_edge(v, static_cast<Vertex>(rng() % v)));
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) e.push_back({u, v});
      }
    }
    const Graph g = build_graph(n, e);
    for (int k : {2, 3}) agree(o, g, k, checks);
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks";
  return o;
}

std::string edge_text(Vertex n, const std::vector<Edge>& edges) {
  std::ostringstream out;
  write_edge_list(out, n, edges);
  return out.str();
}

Outcome ac9() {
  Outcome o;
  auto once = [](std::uint64_t seed) {
    std::string out;
    const Graph a = gen_random_hypothesis(HypothesisKind::kSigma2Half, 2, 1100, seed);
    const PipelineResult ra = construct_sigma2(a, 2, SigmaBound::kHalf, Mode::kStrict, {seed});
    out += edge_text(a.order(), ra.tree) + trace_to_json(ra.trace);
    const Graph b = gen_random_hypothesis(HypothesisKind::kPi2, 2, 900, seed, RandomShape::kLowVertex);
    const PipelineResult rb = construct_pi2(b, 2, Mode::kStrict, {seed});
    out += edge_text(b.order(), rb.tree) + trace_to_json(rb.trace);
    const Graph c = gen_random_hypothesis(HypothesisKind::kMinDegree, 3, 400, seed);
    const PipelineResult rc = construct_min_degree(c, 3, Mode::kStrict, {seed});
    out += edge_text(c.order(), rc.tree) + trace_to_json(rc.trace);
    return out;
  };
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    o.require(once(seed) == once(seed), "runs differ for seed " + std::to_string(seed));
  }
  return o;
}

}  // namespace

int main() {
  bool all = true;
  all &= run("AC1", 1, ac1);
  all &= run("AC2", 1, ac2);
  all &= run("AC3", 120, ac3);
  all &= run("AC4", 600, ac4);
  all &= run("AC5", 60, ac5);
  all &= run("AC6", 300, ac6);
  all &= run("AC7", 900, ac7);
  all &= run("AC8", 600, ac8);
  all &= run("AC9", 0, ac9);
  return all ? 0 : 1;
}
