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

#include <algorithm>
#include <numeric>

#include "combinations.hpp"
#include "histk/certificates.hpp"
#include "histk/constants.hpp"
#include "histk/constructive.hpp"
#include "histk/forest.hpp"
#include "histk/hypothesis.hpp"
#include "good_trees_internal.hpp"

namespace histk {
namespace {

constexpr std::uint64_t kDominationBudget = 5'000'000;

using Parts = std::vector<std::vector<Vertex>>;

// Shared state of one pipeline run.
struct Run {
  const Graph& g;
  int k;
  const SurrogateOptions& options;
  PipelineResult result;
  std::vector<Edge> edges;

  [[noreturn]] void fail(const std::string& why) {
    result.trace.notes.push_back("failed: " + why);
    throw ConstructionError(ErrorCode::kConstructionFailed, why, result.trace);
  }

  void add(Vertex a, Vertex b) { edges.push_back(make_edge(a, b)); }

  void absorb(Construction c) {
    edges.insert(edges.end(), c.edges.begin(), c.edges.end());
    result.trace.subcalls.push_back(std::move(c.trace));
  }

  void forest_on(const std::vector<Vertex>& part, const std::vector<Vertex>& roots) {
    absorb(good_forest_on(g, part, roots, k, options));
  }
  void tree_on(const std::vector<Vertex>& part, const std::vector<Vertex>& roots) {
    absorb(good_tree_on(g, part, roots, k, options));
  }

  PipelineResult finish(CaseTaken c) {
    result.trace.case_taken = c;
    std::sort(edges.begin(), edges.end());
    bool ok = false;
    try {
      ok = verify_2k_st(SpanningForest(g, edges), k);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) fail("assembled tree failed verification");
    result.outcome = Outcome::kWitness;
    result.tree = std::move(edges);
    return std::move(result);
  }

  PipelineResult obstruct(Obstruction o) {
    result.trace.case_taken = CaseTaken::kObstruction;
    result.trace.notes.push_back("obstruction: " + o.description);
    result.outcome = Outcome::kObstruction;
    result.obstruction = std::move(o);
    return std::move(result);
  }
};

std::vector<Vertex> neighbors_in(const Graph& g, Vertex u, const std::vector<Vertex>& part) {
  std::vector<Vertex> out;
  for (Vertex v : g.neighbors(u)) {
    if (std::binary_search(part.begin(), part.end(), v)) out.push_back(v);
  }
  return out;
}

bool touches(const Graph& g, Vertex u, const std::vector<Vertex>& part) {
  for (Vertex v : g.neighbors(u)) {
    if (std::binary_search(part.begin(), part.end(), v)) return true;
  }
  return false;
}

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<Vertex> attached_low(const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& part) {
  std::vector<Vertex> out;
  for (Vertex u : s) {
    if (touches(g, u, part)) out.push_back(u);
  }
  return out;
}

// Components of G - S, host ids, ordered by smallest vertex.
Parts outside_components(const Graph& g, const std::vector<Vertex>& s) {
  const InducedSubgraph rest = remove_vertices(g, s);
  Parts out;
  for (const auto& part : components(rest.graph).parts) {
    std::vector<Vertex> host;
    for (Vertex v : part) host.push_back(rest.to_host[v]);
    out.push_back(std::move(host));
  }
  return out;
}

std::size_t smallest_part(const Parts& q) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i].size() < q[best].size()) best = i;
  }
  return best;
}

// A component whose attached low vertices all have degree <= k and cut the
// graph gives a k-blocking set.
std::optional<std::vector<Vertex>> small_attachment_blocking(const Graph& g, int k, const std::vector<Vertex>& s,
                                                             const Parts& q) {
  for (const auto& part : q) {
    const std::vector<Vertex> a = attached_low(g, s, part);
    if (a.empty()) continue;
    int max_degree = 0;
    for (Vertex u : a) max_degree = std::max(max_degree, g.degree(u));
    if (max_degree > k) continue;
    if ((q.size() >= 2 || a != s) && is_k_blocking_set(g, k, a)) return a;
  }
  return std::nullopt;
}

bool trivial_complete(Run& run, const Graph& g, int k) {
  const Vertex n = g.order();
  if (n <= 2) {
    if (n == 2) run.add(0, 1);
    return true;
  }
  if (n >= k + 2) {
    for (Vertex v = 1; v < n; ++v) run.add(0, v);
    run.result.trace.notes.push_back("complete graph: spanning star at vertex 0");
    return true;
  }
  return false;
}

void require_basics(const Graph& g, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  if (g.order() == 0) throw Error(ErrorCode::kInvalidInput, "empty graph");
  if (!is_connected(g)) throw Error(ErrorCode::kPrecondition, "graph is disconnected");
}

std::optional<PipelineResult> high_degree_shortcut(Run& run, const DegreeProfile& prof) {
  if (!meets_high_degree(run.k, run.g.order(), prof.min_degree)) return std::nullopt;
  run.result.trace.notes.push_back("min degree >= c_k sqrt(n): surrogate solver on the whole graph");
  try {
    run.edges = solve_high_degree(run.g, run.k, run.options);
  } catch (const Error& e) {
    run.result.trace.case_taken = CaseTaken::kHighDegree;
    throw ConstructionError(e.code(), e.what(), run.result.trace);
  }
  return run.finish(CaseTaken::kHighDegree);
}

// Single low vertex of degree >= k+1 touching every component.
PipelineResult single_dominator(Run& run, Vertex u, const std::vector<Vertex>& s, const Parts& q) {
  const Graph& g = run.g;
  const int k = run.k;
  std::vector<Vertex> x;
  for (const auto& part : q) x.push_back(neighbors_in(g, u, part).front());
  const std::size_t target = std::max<std::size_t>(q.size(), std::max(0, k + 1 - (static_cast<int>(s.size()) - 1)));
  for (Vertex v : g.neighbors(u)) {
    if (x.size() >= target) break;
    if (contains(s, v) || std::find(x.begin(), x.end(), v) != x.end()) continue;
    x.push_back(v);
  }
  if (x.size() < target) run.fail("dominator has too few neighbours outside the low set");
  std::sort(x.begin(), x.end());
  run.result.trace.dominating_set = {u};
  for (const auto& part : q) {
    std::vector<Vertex> roots;
    for (Vertex v : x) {
      if (contains(part, v)) roots.push_back(v);
    }
    run.forest_on(part, roots);
  }
  for (Vertex w : s) {
    if (w != u) run.add(u, w);
  }
  for (Vertex v : x) run.add(u, v);
  return run.finish(CaseTaken::kSingleDominator);
}

PipelineResult one_dominator(Run& run, SigmaBound bound, const std::vector<Vertex>& s, const Parts& q,
                             std::size_t q1_index) {
  const Graph& g = run.g;
  const int k = run.k;
  if (q.size() >= 2) {
    if (bound == SigmaBound::kHalf) {
      if (auto b = small_attachment_blocking(g, k, s, q)) {
        return run.obstruct({std::nullopt, *b, "low vertices attached to one component form a k-blocking set"});
      }
    }
    run.fail("single dominating vertex but several components");
  }
  const std::vector<Vertex>& q1 = q[q1_index];
  const std::vector<Vertex> a = attached_low(g, s, q1);
  if (a != s) {
    if (bound == SigmaBound::kNMinus2) {
      LPartition p;
      p.parts[0] = minus(s, a);
      p.parts[1] = a;
      std::vector<Vertex> l3;
      for (Vertex u : a) {
        const auto nb = neighbors_in(g, u, q1);
        l3.insert(l3.end(), nb.begin(), nb.end());
      }
      std::sort(l3.begin(), l3.end());
      l3.erase(std::unique(l3.begin(), l3.end()), l3.end());
      p.parts[3] = minus(q1, l3);
      p.parts[2] = std::move(l3);
      if (auto why = validate_L_partition(g, k, p)) run.fail("four-part structure check failed: " + *why);
      return run.obstruct({p, {}, "graph is a member of the four-part extremal family"});
    }
    if (is_k_blocking_set(g, k, a)) {
      return run.obstruct({std::nullopt, a, "low vertices attached to the component form a k-blocking set"});
    }
    run.fail("attached low vertices cut the graph but are not k-blocking");
  }
  std::vector<Vertex> w;
  for (Vertex u : s) {
    const Vertex v = neighbors_in(g, u, q1).front();
    w.push_back(v);
    run.add(u, v);
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  run.tree_on(q1, w);
  return run.finish(CaseTaken::kOneDominator);
}

PipelineResult dominator_path(Run& run, const std::vector<Vertex>& s, const std::vector<Vertex>& dom, const Parts& q) {
  const Graph& g = run.g;
  const int k = run.k;
  const std::size_t sz = dom.size();
  const std::vector<Vertex> rest = minus(s, dom);
  // Ends of the path take k-1 spare low vertices, middles k-2.
  std::vector<std::vector<Vertex>> share(sz);
  std::size_t next = 0;
  for (std::size_t i = 0; i < sz; ++i) {
    const std::size_t need = (i == 0 || i + 1 == sz) ? k - 1 : k - 2;
    for (std::size_t j = 0; j < need && next < rest.size(); ++j) share[i].push_back(rest[next++]);
  }
  while (next < rest.size()) share[0].push_back(rest[next++]);
  for (std::size_t i = 0; i + 1 < sz; ++i) run.add(dom[i], dom[i + 1]);
  for (std::size_t i = 0; i < sz; ++i) {
    for (Vertex w : share[i]) run.add(dom[i], w);
  }
  for (const auto& part : q) {
    Vertex owner = -1;
    int count = 0;
    for (Vertex u : dom) {
      if (touches(g, u, part)) {
        if (owner == -1) owner = u;
        ++count;
      }
    }
    if (owner == -1) run.fail("dominating set misses a component");
    (void)count;
    const Vertex v = neighbors_in(g, owner, part).front();
    run.add(owner, v);
    run.tree_on(part, {v});
  }
  return run.finish(CaseTaken::kDominatorPath);
}

PipelineResult dominator_pair(Run& run, SigmaBound bound, const std::vector<Vertex>& s, const std::vector<Vertex>& dom,
                              const Parts& q, std::size_t q1_index) {
  const Graph& g = run.g;
  const int k = run.k;
  const std::vector<Vertex>* side[2] = {&q[q1_index], &q[1 - q1_index]};
  Vertex d[2] = {-1, -1};
  for (Vertex u : dom) {
    for (int i = 0; i < 2; ++i) {
      if (touches(g, u, *side[i]) && !touches(g, u, *side[1 - i])) d[i] = u;
    }
  }
  if (d[0] == -1 || d[1] == -1 || d[0] == d[1]) run.fail("dominators do not split between the two components");
  run.result.trace.dominating_set = {d[0], d[1]};
  const std::vector<Vertex> rest = minus(s, dom);

  bool all_small = true;
  for (Vertex u : s) all_small = all_small && g.degree(u) <= 2 * k - 1;
  run.add(d[0], d[1]);

  if (all_small) {
    const std::size_t first = (rest.size() + 1) / 2;
    for (int i = 0; i < 2; ++i) {
      const std::vector<Vertex> roots = neighbors_in(g, d[i], *side[i]);
      for (Vertex v : roots) run.add(d[i], v);
      for (std::size_t j = i == 0 ? 0 : first; j < (i == 0 ? first : rest.size()); ++j) run.add(d[i], rest[j]);
      run.forest_on(*side[i], roots);
    }
    return run.finish(CaseTaken::kBalancedPair);
  }

  const int i0 = g.degree(d[0]) >= 2 * k ? 0 : (g.degree(d[1]) >= 2 * k ? 1 : -1);
  if (i0 == -1) run.fail("no dominator of degree >= 2k");
  const int j = 1 - i0;
  if (g.degree(d[j]) < k + 1) {
    if (bound == SigmaBound::kHalf) {
      if (auto b = small_attachment_blocking(g, k, s, q)) {
        return run.obstruct({std::nullopt, *b, "low vertices attached to one component form a k-blocking set"});
      }
    }
    run.fail("second dominator has degree below k+1");
  }
  // Z_j: one vertex of its component, then spare low vertices, then more of
  // the component, up to k.
  const std::vector<Vertex> nj = neighbors_in(g, d[j], *side[j]);
  std::vector<Vertex> zj = {nj.front()};
  for (Vertex w : rest) {
    if (static_cast<int>(zj.size()) < k) zj.push_back(w);
  }
  for (std::size_t t = 1; t < nj.size() && static_cast<int>(zj.size()) < k; ++t) zj.push_back(nj[t]);
  if (static_cast<int>(zj.size()) < k) run.fail("not enough neighbours for the smaller dominator");
  std::sort(zj.begin(), zj.end());
  // Z_i0: every spare low vertex not in Z_j plus enough of its component.
  std::vector<Vertex> zi = minus(rest, zj);
  const int need = std::max(1, k - static_cast<int>(zi.size()));
  const std::vector<Vertex> ni = neighbors_in(g, d[i0], *side[i0]);
  if (static_cast<int>(ni.size()) < need) run.fail("not enough neighbours for the larger dominator");
  zi.insert(zi.end(), ni.begin(), ni.begin() + need);
  std::sort(zi.begin(), zi.end());

  const std::vector<Vertex>* z[2];
  z[i0] = &zi;
  z[j] = &zj;
  for (int i = 0; i < 2; ++i) {
    std::vector<Vertex> roots;
    for (Vertex v : *z[i]) {
      run.add(d[i], v);
      if (contains(*side[i], v)) roots.push_back(v);
    }
    run.forest_on(*side[i], roots);
  }
  return run.finish(CaseTaken::kSplitPair);
}

}  // namespace

std::vector<Vertex> select_dominating(const Graph& g, std::span<const Vertex> s, const Parts& q,
                                      DominationRule rule) {
  std::vector<Vertex> cands;
  std::vector<std::vector<int>> reach;
  std::vector<char> covered(q.size(), 0);
  std::vector<Vertex> sorted_s(s.begin(), s.end());
  std::sort(sorted_s.begin(), sorted_s.end());
  for (Vertex u : sorted_s) {
    std::vector<int> r;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (touches(g, u, q[i])) r.push_back(static_cast<int>(i));
    }
    if (r.empty()) continue;
    for (int i : r) covered[i] = 1;
    cands.push_back(u);
    reach.push_back(std::move(r));
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw Error(ErrorCode::kPrecondition, "low set does not dominate the components");
  }
  if (q.empty()) return {};

  std::uint64_t visited = 0;
  std::vector<int> count(q.size(), 0);
  auto dominates = [&](std::span<const std::size_t> idx) {
    if (++visited > kDominationBudget) {
      throw Error(ErrorCode::kConstructionFailed, "dominating set enumeration budget exhausted");
    }
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i : idx) {
      for (int c : reach[i]) ++count[c];
    }
    return std::find(count.begin(), count.end(), 0) == count.end();
  };
  // Call right after dominates(); every member needs a private component.
  auto minimal = [&](std::span<const std::size_t> idx) {
    for (std::size_t i : idx) {
      bool has_private = false;
      for (int c : reach[i]) has_private = has_private || count[c] == 1;
      if (!has_private) return false;
    }
    return true;
  };
  auto to_vertices = [&](std::span<const std::size_t> idx) {
    std::vector<Vertex> out;
    for (std::size_t i : idx) out.push_back(cands[i]);
    return out;
  };

  std::vector<Vertex> best;
  if (rule == DominationRule::kMinimum) {
    for (std::size_t r = 1; r <= cands.size() && best.empty(); ++r) {
      internal::for_each_combination(cands.size(), r, [&](std::span<const std::size_t> idx) {
        if (!dominates(idx)) return false;
        best = to_vertices(idx);
        return true;
      });
    }
    return best;
  }
  const std::size_t top = std::min(cands.size(), q.size());
  for (std::size_t r = top; r >= 1 && best.empty(); --r) {
    std::int64_t best_sum = -1;
    internal::for_each_combination(cands.size(), r, [&](std::span<const std::size_t> idx) {
      if (!dominates(idx) || !minimal(idx)) return false;
      std::int64_t sum = 0;
      for (std::size_t i : idx) sum += g.degree(cands[i]);
      if (sum > best_sum) {
        best_sum = sum;
        best = to_vertices(idx);
      }
      return false;
    });
  }
  return best;
}

PipelineResult construct_min_degree(const Graph& g, int k, Mode mode, const SurrogateOptions& options) {
  require_basics(g, k);
  Run run{g, k, options, {}, {}};
  run.result.trace.procedure = "min-degree";
  const DegreeProfile prof = degree_profile(g);
  if (mode == Mode::kStrict && !meets_high_degree(k, g.order(), prof.min_degree)) {
    throw Error(ErrorCode::kHypothesisViolation, "min degree below c_k sqrt(n)");
  }
  try {
    run.edges = solve_high_degree(g, k, options);
  } catch (const Error& e) {
    run.result.trace.case_taken = CaseTaken::kHighDegree;
    throw ConstructionError(e.code(), e.what(), run.result.trace);
  }
  return run.finish(CaseTaken::kHighDegree);
}

PipelineResult construct_sigma2(const Graph& g, int k, SigmaBound bound, Mode mode, const SurrogateOptions& options) {
  require_basics(g, k);
  Run run{g, k, options, {}, {}};
  run.result.trace.procedure = bound == SigmaBound::kNMinus2 ? "degree-sum-n-2" : "degree-sum-half";
  const DegreeProfile prof = degree_profile(g);
  const Vertex n = g.order();
  if (mode == Mode::kStrict) {
    const auto kind = bound == SigmaBound::kNMinus2 ? HypothesisKind::kSigma2NMinus2 : HypothesisKind::kSigma2Half;
    const HypothesisCheck h = check_hypothesis(g, prof, kind, k);
    if (!h.holds) throw Error(ErrorCode::kHypothesisViolation, h.detail);
  }
  if (auto r = high_degree_shortcut(run, prof)) return std::move(*r);

  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v) {
    const std::int64_t d = g.degree(v);
    const bool low = bound == SigmaBound::kNMinus2 ? 2 * d < n - 2 : 4 * d < n + 2 * k - 2;
    if (low) s.push_back(v);
  }
  run.result.trace.low_degree_set = s;
  if (!is_clique(g, s)) run.fail("low-degree set is not a clique");
  const Parts q = outside_components(g, s);
  run.result.trace.components = q;
  if (q.empty()) {
    if (!trivial_complete(run, g, k)) run.fail("complete graph on at most k+1 vertices");
    return run.finish(CaseTaken::kComplete);
  }
  const std::size_t q1 = smallest_part(q);

  for (Vertex u : s) {
    if (g.degree(u) < k + 1) continue;
    bool all = true;
    for (const auto& part : q) all = all && touches(g, u, part);
    if (all) return single_dominator(run, u, s, q);
  }

  std::vector<Vertex> dom;
  try {
    dom = select_dominating(g, s, q, DominationRule::kMinimalLargest);
  } catch (const Error& e) {
    run.fail(e.what());
  }
  run.result.trace.dominating_set = dom;
  if (dom.size() == 1) return one_dominator(run, bound, s, q, q1);
  const std::size_t sz = dom.size();
  if (s.size() >= (k - 1) * sz + 2) return dominator_path(run, s, dom, q);
  if (sz == 2 && q.size() == 2) return dominator_pair(run, bound, s, dom, q, q1);
  if (bound == SigmaBound::kHalf) {
    if (auto b = small_attachment_blocking(g, k, s, q)) {
      return run.obstruct({std::nullopt, *b, "low vertices attached to one component form a k-blocking set"});
    }
  }
  run.fail("dominating set of size " + std::to_string(sz) + " with too few low vertices");
}

PipelineResult construct_pi2(const Graph& g, int k, Mode mode, const SurrogateOptions& options) {
  require_basics(g, k);
  Run run{g, k, options, {}, {}};
  run.result.trace.procedure = "degree-product";
  const DegreeProfile prof = degree_profile(g);
  const Vertex n = g.order();
  if (mode == Mode::kStrict) {
    const HypothesisCheck h = check_hypothesis(g, prof, HypothesisKind::kPi2, k);
    if (!h.holds) throw Error(ErrorCode::kHypothesisViolation, h.detail);
  }
  if (auto r = high_degree_shortcut(run, prof)) return std::move(*r);

  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v) {
    if (below_sqrt_pk_n(k, n, g.degree(v))) s.push_back(v);
  }
  run.result.trace.low_degree_set = s;
  if (!is_clique(g, s)) run.fail("low-degree set is not a clique");
  const Parts q = outside_components(g, s);
  run.result.trace.components = q;
  if (q.empty()) {
    if (!trivial_complete(run, g, k)) run.fail("complete graph on at most k+1 vertices");
    return run.finish(CaseTaken::kComplete);
  }

  std::vector<Vertex> dom;
  try {
    dom = select_dominating(g, s, q, DominationRule::kMinimum);
  } catch (const Error& e) {
    run.fail(e.what());
  }
  run.result.trace.dominating_set = dom;
  const int sz = static_cast<int>(dom.size());
  for (Vertex u : dom) {
    if (g.degree(u) < sz * k + 1) run.fail("dominator " + std::to_string(u) + " has degree below sk+1");
  }

  const std::vector<Vertex> spare = minus(s, dom);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> w(sz);
  for (int i = 0; i < sz; ++i) {
    const Vertex u = dom[i];
    // A component only this dominator reaches.
    const std::vector<Vertex>* own = nullptr;
    for (const auto& part : q) {
      bool only = touches(g, u, part);
      for (Vertex other : dom) only = only && (other == u || !touches(g, other, part));
      if (only) {
        own = &part;
        break;
      }
    }
    if (own == nullptr) run.fail("dominator without a private component");
    const std::size_t size = sz == 1 ? k + 1 : (i == 0 || i == sz - 1 ? k : k - 1);
    for (Vertex v : neighbors_in(g, u, *own)) {
      if (!used[v]) {
        w[i].push_back(v);
        used[v] = 1;
        break;
      }
    }
    for (Vertex v : spare) {
      if (w[i].size() >= size) break;
      if (!used[v]) {
        w[i].push_back(v);
        used[v] = 1;
      }
    }
    for (Vertex v : g.neighbors(u)) {
      if (w[i].size() >= size) break;
      if (!used[v] && !contains(s, v)) {
        w[i].push_back(v);
        used[v] = 1;
      }
    }
    if (w[i].size() < size) run.fail("not enough neighbours to fill the attachment set");
    std::sort(w[i].begin(), w[i].end());
    for (Vertex v : w[i]) run.add(u, v);
  }

  for (const auto& part : q) {
    std::vector<Vertex> roots;
    for (Vertex v : part) {
      if (used[v]) roots.push_back(v);
    }
    if (roots.empty()) {
      Vertex owner = -1;
      for (Vertex u : dom) {
        if (touches(g, u, part)) {
          owner = u;
          break;
        }
      }
      const Vertex v = neighbors_in(g, owner, part).front();
      used[v] = 1;
      roots.push_back(v);
      run.add(owner, v);
    }
    run.forest_on(part, roots);
  }
  for (int i = 0; i + 1 < sz; ++i) run.add(dom[i], dom[i + 1]);
  for (Vertex v : spare) {
    if (!used[v]) run.add(dom[0], v);
  }
  return run.finish(CaseTaken::kProduct);
}

}  // namespace histk
