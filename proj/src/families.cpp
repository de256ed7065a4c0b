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

#include "histk/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "histk/certificates.hpp"
#include "histk/constants.hpp"
#include "histk/error.hpp"

namespace histk {
namespace {

using Rng = std::mt19937_64;

// Dense adjacency matrix used while assembling generated graphs.
class Builder {
 public:
  explicit Builder(Vertex n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), deg_(n, 0) {}

  Vertex order() const { return n_; }
  bool has(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
  int degree(Vertex v) const { return deg_[v]; }

  void add(Vertex u, Vertex v) {
    if (u == v || has(u, v)) return;
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    ++deg_[u];
    ++deg_[v];
  }
  void remove(Vertex u, Vertex v) {
    if (!has(u, v)) return;
    adj_[index(u, v)] = adj_[index(v, u)] = 0;
    --deg_[u];
    --deg_[v];
  }
  void clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) add(vs[i], vs[j]);
    }
  }

  Graph build(std::span<const Vertex> relabel = {}) const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!has(u, v)) continue;
        edges.push_back(relabel.empty() ? Edge{u, v} : make_edge(relabel[u], relabel[v]));
      }
    }
    return build_graph(n_, edges);
  }

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  Vertex n_;
  std::vector<char> adj_;
  std::vector<int> deg_;
};

std::vector<Vertex> range(Vertex from, Vertex to) {
  std::vector<Vertex> out;
  for (Vertex v = from; v < to; ++v) out.push_back(v);
  return out;
}

int uniform(Rng& rng, int lo, int hi) {
  if (hi < lo) hi = lo;
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Vertex> random_permutation(Vertex n, Rng& rng) {
  std::vector<Vertex> p = range(0, n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Removes up to `count` disjoint edges from the clique on `vs`.
void remove_random_matching(Builder& b, std::vector<Vertex> vs, int count, Rng& rng) {
  std::shuffle(vs.begin(), vs.end(), rng);
  for (std::size_t i = 0; i + 1 < vs.size() && count > 0; i += 2, --count) b.remove(vs[i], vs[i + 1]);
}

void connect_to_random(Builder& b, Vertex u, std::vector<Vertex> pool, int count, Rng& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  for (int i = 0; i < count && i < static_cast<int>(pool.size()); ++i) b.add(u, pool[i]);
}

int ceil_half_bound(Vertex n, int k) { return (n + 2 * k - 1) / 2; }

// Least degree meeting delta >= c_k sqrt(n).
int high_degree_floor(int k, Vertex n) {
  int d = 0;
  while (!meets_high_degree(k, n, d)) ++d;
  return d;
}

int product_floor(int k, Vertex n) {
  std::int64_t d = 0;
  while (!meets_pk_n(k, n, d * d)) ++d;
  return static_cast<int>(d);
}

}  // namespace

Labels LFamilyInstance::labels() const {
  return {{"L1", partition.parts[0]}, {"L2", partition.parts[1]}, {"L3", partition.parts[2]},
          {"L4", partition.parts[3]}};
}

Labels GPrimeInstance::labels() const {
  return {{"A0", {u, v1, v2}}, {"u", {u}}, {"v1", {v1}}, {"v2", {v2}},
          {"A1", a1},          {"A2", a2}, {"W1", w1},   {"W2", w2}};
}

std::optional<std::string> validate_L_partition(const Graph& g, int k, const LPartition& p) {
  const Vertex n = g.order();
  if (n < 2 * k + 1) return "order below 2k + 1";
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < 4; ++i) {
    if (p.parts[i].empty()) return "L" + std::to_string(i + 1) + " is empty";
    for (Vertex v : p.parts[i]) {
      if (!g.contains(v)) return "vertex " + std::to_string(v) + " out of range";
      if (part_of[v] != -1) return "vertex " + std::to_string(v) + " in two parts";
      part_of[v] = i;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[v] == -1) return "vertex " + std::to_string(v) + " in no part";
  }
  std::vector<Vertex> l12 = p.parts[0];
  l12.insert(l12.end(), p.parts[1].begin(), p.parts[1].end());
  if (!is_clique(g, l12)) return "L1 u L2 is not a clique";
  if (!is_clique(g, p.parts[3])) return "L4 is not a clique";
  const int l12_size = static_cast<int>(l12.size());
  const int l4_size = static_cast<int>(p.parts[3].size());
  for (Vertex v : p.parts[0]) {
    for (Vertex w : g.neighbors(v)) {
      if (part_of[w] >= 2) return "L1 vertex " + std::to_string(v) + " sees L3 u L4";
    }
  }
  for (Vertex v : p.parts[1]) {
    bool sees_l3 = false;
    for (Vertex w : g.neighbors(v)) {
      if (part_of[w] == 3) return "L2 vertex " + std::to_string(v) + " sees L4";
      sees_l3 = sees_l3 || part_of[w] == 2;
    }
    if (!sees_l3) return "L2 vertex " + std::to_string(v) + " has no L3 neighbour";
    if (g.degree(v) > k) return "L2 vertex " + std::to_string(v) + " has degree above k";
  }
  for (Vertex v : p.parts[2]) {
    int l2 = 0, l4 = 0;
    for (Vertex w : g.neighbors(v)) {
      l2 += part_of[w] == 1;
      l4 += part_of[w] == 3;
    }
    if (l2 == 0) return "L3 vertex " + std::to_string(v) + " has no L2 neighbour";
    if (l4 != l4_size) return "L3 vertex " + std::to_string(v) + " misses part of L4";
    if (g.degree(v) < n - l12_size - 1) return "L3 vertex " + std::to_string(v) + " has degree too low";
  }
  return std::nullopt;
}

std::optional<LPartition> recognize_L_family(const Graph& g, int k) {
  const Vertex n = g.order();
  if (n < 2 * k + 1) return std::nullopt;
  LPartition p;
  std::vector<char> low(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) low[v] = g.degree(v) <= k;
  std::vector<char> l3(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!low[v]) continue;
    bool outside = false;
    for (Vertex w : g.neighbors(v)) {
      if (!low[w]) {
        outside = true;
        l3[w] = 1;
      }
    }
    p.parts[outside ? 1 : 0].push_back(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!low[v]) p.parts[l3[v] ? 2 : 3].push_back(v);
  }
  if (validate_L_partition(g, k, p)) return std::nullopt;
  return p;
}

LFamilyInstance gen_L_family(const FamilyParams& params) {
  const int k = params.k;
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  for (int s : params.sizes) {
    if (s < 1) throw Error(ErrorCode::kInfeasibleParams, "every part needs at least one vertex");
  }
  const auto [l1, l2, l3, l4] = params.sizes;
  const Vertex n = l1 + l2 + l3 + l4;
  if (n < 2 * k + 1) throw Error(ErrorCode::kInfeasibleParams, "order below 2k + 1");
  LPartition p;
  p.parts[0] = range(0, l1);
  p.parts[1] = range(l1, l1 + l2);
  p.parts[2] = range(l1 + l2, l1 + l2 + l3);
  p.parts[3] = range(l1 + l2 + l3, n);

  Builder b(n);
  b.clique(range(0, l1 + l2));
  b.clique(range(l1 + l2, n));
  for (int t = 0; t < std::max(l2, l3); ++t) b.add(p.parts[1][t % l2], p.parts[2][t % l3]);

  if (params.l3_missing > 0) {
    Rng rng(params.seed);
    const int floor = n - (l1 + l2) - 1;
    std::vector<Edge> pairs;
    for (int i = 0; i < l3; ++i) {
      for (int j = i + 1; j < l3; ++j) pairs.push_back({p.parts[2][i], p.parts[2][j]});
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    int removed = 0;
    for (const Edge& e : pairs) {
      if (removed == params.l3_missing) break;
      if (b.degree(e.u) - 1 >= floor && b.degree(e.v) - 1 >= floor) {
        b.remove(e.u, e.v);
        ++removed;
      }
    }
  }

  LFamilyInstance out{b.build(), std::move(p)};
  if (auto why = validate_L_partition(out.graph, k, out.partition)) {
    throw Error(ErrorCode::kInfeasibleParams, "parameters give no family member: " + *why);
  }
  return out;
}

GPrimeInstance gen_Gprime(int k, Vertex n) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  if (n % 2 == 0) throw Error(ErrorCode::kInfeasibleParams, "order must be odd");
  const Vertex h = (n - 3) / 2;
  if (n < 3 || h < k + 2) throw Error(ErrorCode::kInfeasibleParams, "(n - 3) / 2 must be at least k + 2");
  GPrimeInstance out;
  out.a1 = range(3, 3 + h);
  out.a2 = range(3 + h, n);
  out.w1.assign(out.a1.begin(), out.a1.begin() + (k - 1));
  out.w2.assign(out.a2.begin(), out.a2.begin() + (k - 1));
  Builder b(n);
  b.clique(std::vector<Vertex>{out.u, out.v1, out.v2});
  b.clique(out.a1);
  b.clique(out.a2);
  for (Vertex w : out.w1) b.add(out.u, w);
  for (Vertex w : out.w2) {
    b.add(out.v1, w);
    b.add(out.v2, w);
  }
  out.graph = b.build();
  return out;
}

std::string_view to_string(RandomShape shape) {
  switch (shape) {
    case RandomShape::kAuto: return "auto";
    case RandomShape::kDense: return "dense";
    case RandomShape::kLowClique: return "low-clique";
    case RandomShape::kHub: return "hub";
    case RandomShape::kTwoSided: return "two-sided";
    case RandomShape::kBalanced: return "balanced";
    case RandomShape::kSplit: return "split";
    case RandomShape::kPairIntoOne: return "pair-into-one";
    case RandomShape::kSingleDominator: return "single-dominator";
    case RandomShape::kLowVertex: return "low-vertex";
  }
  return "unknown";
}

std::optional<RandomShape> parse_random_shape(std::string_view text) {
  for (RandomShape s : {RandomShape::kAuto, RandomShape::kDense, RandomShape::kLowClique, RandomShape::kHub,
                        RandomShape::kTwoSided, RandomShape::kBalanced, RandomShape::kSplit,
                        RandomShape::kPairIntoOne, RandomShape::kSingleDominator, RandomShape::kLowVertex}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

Graph gen_min_degree_graph(Vertex n, int floor, std::uint64_t seed) {
  if (n < 1 || floor < 0 || floor > n - 1) throw Error(ErrorCode::kInfeasibleParams, "degree floor out of range");
  Rng rng(seed);
  Builder b(n);
  const double lo = static_cast<double>(floor) / std::max(1, n - 1);
  const double p = std::min(1.0, lo + (1.0 - lo) * std::uniform_real_distribution<double>(0.0, 0.5)(rng));
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add(u, v);
    }
  }
  // Raise deficient vertices, preferring partners that are themselves low.
  std::vector<Vertex> order = random_permutation(n, rng);
  for (Vertex u : order) {
    if (b.degree(u) >= floor) continue;
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && !b.has(u, v)) pool.push_back(v);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex c) {
      return (b.degree(a) < floor) > (b.degree(c) < floor);
    });
    for (std::size_t i = 0; i < pool.size() && b.degree(u) < floor; ++i) b.add(u, pool[i]);
  }
  Graph g = b.build();
  const Components comps = components(g);
  for (std::size_t i = 1; i < comps.count(); ++i) {
    const auto& a = comps.parts[i - 1];
    const auto& c = comps.parts[i];
    b.add(a[uniform(rng, 0, static_cast<int>(a.size()) - 1)], c[uniform(rng, 0, static_cast<int>(c.size()) - 1)]);
  }
  return comps.count() > 1 ? b.build() : g;
}

Graph gen_block_graph(Vertex n, int min_block, int component_count, std::uint64_t seed) {
  if (min_block < 2 || component_count < 1 || n < static_cast<Vertex>(component_count) * min_block) {
    throw Error(ErrorCode::kInfeasibleParams, "not enough vertices for the requested blocks");
  }
  Rng rng(seed);
  std::vector<int> sizes(component_count, min_block);
  for (int extra = n - component_count * min_block; extra > 0; --extra) ++sizes[uniform(rng, 0, component_count - 1)];

  Builder b(n);
  Vertex next = 0;
  auto dense_block = [&](std::vector<Vertex> vs) {
    b.clique(vs);
    remove_random_matching(b, vs, uniform(rng, 0, static_cast<int>(vs.size()) / 4), rng);
  };
  const int fresh_min = min_block - 1;  // new vertices a glued block brings
  for (int size : sizes) {
    std::vector<Vertex> members;
    int first = uniform(rng, min_block, std::min(size, 2 * min_block));
    if (size - first > 0 && size - first < fresh_min) first = size;
    std::vector<Vertex> vs = range(next, next + first);
    next += first;
    members = vs;
    dense_block(vs);
    int remaining = size - first;
    while (remaining > 0) {
      int fresh = remaining < 2 * fresh_min ? remaining
                                             : uniform(rng, fresh_min, std::min(remaining - fresh_min, 2 * min_block));
      const Vertex glue = members[uniform(rng, 0, static_cast<int>(members.size()) - 1)];
      std::vector<Vertex> block = range(next, next + fresh);
      next += fresh;
      remaining -= fresh;
      members.insert(members.end(), block.begin(), block.end());
      block.push_back(glue);
      dense_block(block);
    }
  }
  return b.build(random_permutation(n, rng));
}

namespace {

bool meets_bound(const Graph& g, const DegreeProfile& prof, HypothesisKind kind, int k) {
  const Vertex n = g.order();
  switch (kind) {
    case HypothesisKind::kMinDegree: return meets_high_degree(k, n, prof.min_degree);
    case HypothesisKind::kSigma2NMinus2: return prof.sigma2.is_infinite() || prof.sigma2.value() >= n - 2;
    case HypothesisKind::kSigma2Half:
      return prof.sigma2.is_infinite() || 2 * prof.sigma2.value() >= n + 2 * k - 2;
    case HypothesisKind::kPi2: return n >= k + 2 && (prof.pi2.is_infinite() || meets_pk_n(k, n, prof.pi2.value()));
  }
  return false;
}

int dense_floor(HypothesisKind kind, int k, Vertex n) {
  switch (kind) {
    case HypothesisKind::kMinDegree: return high_degree_floor(k, n);
    case HypothesisKind::kSigma2NMinus2: return (n - 1) / 2;
    case HypothesisKind::kSigma2Half: return (n + 2 * k + 1) / 4;
    case HypothesisKind::kPi2: return product_floor(k, n);
  }
  return 0;
}

// Degree range [lo, hi] for a low vertex, keeping it below c_k sqrt(n) when
// the lower limit allows.
int pick_low(Rng& rng, int lo, int hi_hint) { return uniform(rng, lo, std::max(lo, hi_hint)); }

bool balanced_feasible(int k, Vertex n) {
  const int q1 = (n - 2) / 2;
  const int a_min = std::max(ceil_half_bound(n, k) - q1, k);
  return a_min <= 2 * k - 2;
}

bool low_vertex_feasible(int k, Vertex n) {
  if (n < k + 3) return false;
  std::int64_t a = 1;
  while (a <= n - 2 && !meets_pk_n(k, n, a * (n - 2))) ++a;
  return a <= n - 2 && a < high_degree_floor(k, n) && a >= k + 1;
}

std::vector<RandomShape> shapes_for(HypothesisKind kind, int k, Vertex n) {
  switch (kind) {
    case HypothesisKind::kMinDegree: return {RandomShape::kDense};
    case HypothesisKind::kSigma2NMinus2:
      return {RandomShape::kLowClique, RandomShape::kLowClique, RandomShape::kLowClique, RandomShape::kHub};
    case HypothesisKind::kSigma2Half: {
      std::vector<RandomShape> out = {RandomShape::kTwoSided, RandomShape::kSplit, RandomShape::kPairIntoOne,
                                      RandomShape::kSingleDominator};
      if (balanced_feasible(k, n)) out.insert(out.begin() + 1, RandomShape::kBalanced);
      return out;
    }
    case HypothesisKind::kPi2:
      if (low_vertex_feasible(k, n)) return {RandomShape::kLowVertex};
      return {RandomShape::kDense};
  }
  return {RandomShape::kDense};
}

Graph build_shape(RandomShape shape, HypothesisKind kind, int k, Vertex n, Rng& rng) {
  const int hd = high_degree_floor(k, n);
  const int half = ceil_half_bound(n, k);
  switch (shape) {
    case RandomShape::kAuto:
    case RandomShape::kDense:
      return gen_min_degree_graph(n, dense_floor(kind, k, n), rng());
    case RandomShape::kLowClique: {
      const int s = uniform(rng, 1, std::min(4, n / 4));
      Builder b(n);
      const std::vector<Vertex> low = range(0, s), rest = range(s, n);
      b.clique(low);
      b.clique(rest);
      remove_random_matching(b, rest, uniform(rng, 0, (n - s) / 4), rng);
      for (Vertex u : low) connect_to_random(b, u, rest, pick_low(rng, 1, hd - s), rng);
      return b.build(random_permutation(n, rng));
    }
    case RandomShape::kHub: {
      const int q1 = uniform(rng, (n - 1) / 3, (n - 1) / 2);
      Builder b(n);
      b.clique(range(1, 1 + q1));
      b.clique(range(1 + q1, n));
      for (Vertex v = 1; v < n; ++v) b.add(0, v);
      return b.build(random_permutation(n, rng));
    }
    case RandomShape::kTwoSided: {
      const int m = uniform(rng, 2 * k, 2 * k + 2);
      const int q1 = (n - m) / 2;
      const std::vector<Vertex> low = range(0, m), side1 = range(m, m + q1), side2 = range(m + q1, n);
      Builder b(n);
      b.clique(low);
      b.clique(side1);
      b.clique(side2);
      const int q_min = std::min<int>(side1.size(), side2.size());
      const int a_min = std::max(1, half - (q_min - 1) - (m - 1));
      for (Vertex u : low) {
        const auto& side = u % 2 == 0 ? side1 : side2;
        connect_to_random(b, u, side, std::min<int>(pick_low(rng, a_min, hd - m), side.size()), rng);
      }
      return b.build(random_permutation(n, rng));
    }
    case RandomShape::kBalanced:
    case RandomShape::kSplit: {
      const int q1 = (n - 2) / 2;
      const std::vector<Vertex> side1 = range(2, 2 + q1), side2 = range(2 + q1, n);
      const int a_min = std::max(half - q1, 1);
      int ax, ay;
      if (shape == RandomShape::kBalanced) {
        const int lo = std::max(a_min, k);
        if (lo > 2 * k - 2) throw Error(ErrorCode::kInfeasibleParams, "balanced shape needs n even for this k");
        ax = uniform(rng, lo, 2 * k - 2);
        ay = uniform(rng, lo, 2 * k - 2);
      } else {
        ax = pick_low(rng, std::max(a_min, 2 * k - 1), hd - 2);
        ay = pick_low(rng, std::max(a_min, k), hd - 2);
        if (uniform(rng, 0, 1) == 1) std::swap(ax, ay);
      }
      Builder b(n);
      b.add(0, 1);
      b.clique(side1);
      b.clique(side2);
      connect_to_random(b, 0, side1, ax, rng);
      connect_to_random(b, 1, side2, ay, rng);
      return b.build(random_permutation(n, rng));
    }
    case RandomShape::kPairIntoOne: {
      const int m = uniform(rng, 1, k);
      const std::vector<Vertex> low = range(0, m), rest = range(m, n);
      Builder b(n);
      b.clique(low);
      b.clique(rest);
      remove_random_matching(b, rest, uniform(rng, 0, (n - m) / 4), rng);
      for (Vertex u : low) connect_to_random(b, u, rest, uniform(rng, 1, k - m + 1), rng);
      return b.build(random_permutation(n, rng));
    }
    case RandomShape::kSingleDominator: {
      const int q1 = (n - 1) / 2;
      const std::vector<Vertex> side1 = range(1, 1 + q1), side2 = range(1 + q1, n);
      const int d = pick_low(rng, std::max(k + 1, half - (q1 - 1)), hd - 1);
      const int a1 = uniform(rng, 1, d - 1);
      Builder b(n);
      b.clique(side1);
      b.clique(side2);
      connect_to_random(b, 0, side1, a1, rng);
      connect_to_random(b, 0, side2, d - a1, rng);
      return b.build(random_permutation(n, rng));
    }
    case RandomShape::kLowVertex: {
      std::int64_t a_min = 1;
      while (!meets_pk_n(k, n, a_min * (n - 2))) ++a_min;
      Builder b(n);
      const std::vector<Vertex> rest = range(1, n);
      b.clique(rest);
      connect_to_random(b, 0, rest, pick_low(rng, static_cast<int>(a_min), hd - 1), rng);
      return b.build(random_permutation(n, rng));
    }
  }
  throw Error(ErrorCode::kInvalidInput, "unknown shape");
}

}  // namespace

Graph gen_random_hypothesis(HypothesisKind kind, int k, Vertex n, std::uint64_t seed, RandomShape shape) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  if (n < 2 * k + 4) throw Error(ErrorCode::kInfeasibleParams, "order too small for a random instance");
  if (shape == RandomShape::kAuto) {
    const auto options = shapes_for(kind, k, n);
    shape = options[seed % options.size()];
  }
  Rng rng(seed);
  constexpr int kAttempts = 20;
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Graph g = build_shape(shape, kind, k, n, rng);
    if (!is_connected(g)) {
      last_failure = "disconnected";
      continue;
    }
    const DegreeProfile prof = degree_profile(g);
    if (!meets_bound(g, prof, kind, k)) {
      last_failure = "degree bound missed";
      continue;
    }
    if (kind == HypothesisKind::kSigma2NMinus2 && recognize_L_family(g, k)) {
      last_failure = "landed in the four-part family";
      continue;
    }
    if (kind == HypothesisKind::kSigma2Half && find_k_blocking_set(g, k, default_blocking_cap(k))) {
      last_failure = "has a k-blocking set";
      continue;
    }
    return g;
  }
  throw Error(ErrorCode::kUnsatisfiableParams, std::string("shape ") + std::string(to_string(shape)) +
                                                   " failed after retries: " + last_failure);
}

}  // namespace histk
