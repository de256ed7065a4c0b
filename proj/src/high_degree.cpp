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
#include <random>

#include "histk/certificates.hpp"
#include "histk/constructive.hpp"
#include "histk/forest.hpp"

namespace histk {
namespace {

constexpr Vertex kOutside = -2;
constexpr Vertex kNoParent = -1;

// One greedy attempt: grow stars from a root, promote the leaf that reaches
// most new vertices, then repair vertices whose degree fell in [2, k].
class HubTree {
 public:
  HubTree(const Graph& g, int k, std::vector<std::uint64_t> priority)
      : g_(g), k_(k), n_(g.order()), priority_(std::move(priority)),
        parent_(n_, kOutside), children_(n_, 0), gain_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) gain_[v] = g_.degree(v);
  }

  bool run(Vertex root) {
    parent_[root] = kNoParent;
    mark_joined(root);
    absorb(root);
    while (in_tree_ < n_) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (parent_[v] == kOutside || children_[v] != 0 || gain_[v] == 0) continue;
        if (best == -1 || gain_[v] > gain_[best] || (gain_[v] == gain_[best] && priority_[v] < priority_[best])) {
          best = v;
        }
      }
      if (best == -1) return false;  // disconnected
      absorb(best);
    }
    for (int pass = 0; pass < 4 * n_; ++pass) {
      Vertex bad = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (deficient(v)) {
          bad = v;
          break;
        }
      }
      if (bad == -1) return true;
      if (!fill_up(bad) && !demote(bad)) return false;
    }
    return false;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (parent_[v] >= 0) out.push_back(make_edge(v, parent_[v]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int degree(Vertex v) const { return children_[v] + (parent_[v] >= 0 ? 1 : 0); }
  bool forbidden(int d) const { return d >= 2 && d <= k_; }
  bool deficient(Vertex v) const { return forbidden(degree(v)); }

  void mark_joined(Vertex w) {
    ++in_tree_;
    for (Vertex x : g_.neighbors(w)) --gain_[x];
  }

  void attach(Vertex w, Vertex p) {
    parent_[w] = p;
    ++children_[p];
    mark_joined(w);
  }

  void absorb(Vertex s) {
    for (Vertex w : g_.neighbors(s)) {
      if (parent_[w] == kOutside) attach(w, s);
    }
  }

  bool is_ancestor(Vertex a, Vertex v) const {
    for (Vertex x = v; x >= 0; x = parent_[x]) {
      if (x == a) return true;
    }
    return false;
  }

  void move(Vertex w, Vertex to) {
    --children_[parent_[w]];
    parent_[w] = to;
    ++children_[to];
  }

  // Pull neighbours (with their subtrees) under s while their old parent
  // stays outside [2, k].
  bool fill_up(Vertex s) {
    while (deficient(s)) {
      Vertex pick = -1;
      int pick_rank = 0;
      for (Vertex w : g_.neighbors(s)) {
        const Vertex p = parent_[w];
        if (p < 0 || p == s || is_ancestor(w, s)) continue;
        const int after = degree(p) - 1;
        if (forbidden(after)) continue;
        // Prefer donors that stay stems over ones that turn into leaves.
        const int rank = after >= k_ + 1 ? 2 : 1;
        if (pick == -1 || rank > pick_rank || (rank == pick_rank && priority_[w] < priority_[pick])) {
          pick = w;
          pick_rank = rank;
        }
      }
      if (pick == -1) return false;
      move(pick, s);
    }
    return true;
  }

  // Re-hang the children of s on other stems so s becomes a leaf.
  bool demote(Vertex s) {
    const std::vector<Vertex> saved_parent = parent_;
    const std::vector<int> saved_children = children_;
    std::vector<Vertex> kids;
    for (Vertex v = 0; v < n_; ++v) {
      if (parent_[v] == s) kids.push_back(v);
    }
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return priority_[a] < priority_[b]; });
    // A root keeps one child and becomes a leaf of it.
    bool kept = parent_[s] >= 0;
    for (Vertex c : kids) {
      Vertex target = -1;
      for (Vertex x : g_.neighbors(c)) {
        if (x == s || parent_[x] == kOutside || degree(x) < k_ + 1 || is_ancestor(c, x)) continue;
        if (target == -1 || priority_[x] < priority_[target]) target = x;
      }
      if (target != -1) {
        move(c, target);
      } else if (!kept) {
        kept = true;
      } else {
        parent_ = saved_parent;
        children_ = saved_children;
        return false;
      }
    }
    return !deficient(s);
  }

  const Graph& g_;
  int k_;
  Vertex n_;
  std::vector<std::uint64_t> priority_;
  std::vector<Vertex> parent_;
  std::vector<int> children_;
  std::vector<int> gain_;
  Vertex in_tree_ = 0;
};

bool verified(const Graph& g, const std::vector<Edge>& edges, int k) {
  return verify_2k_st(SpanningForest(g, edges), k);
}

}  // namespace

std::vector<Edge> solve_high_degree(const Graph& g, int k, const SurrogateOptions& options) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  const Vertex n = g.order();
  if (n == 0) return {};
  if (!is_connected(g)) throw Error(ErrorCode::kPrecondition, "surrogate solver needs a connected graph");
  if (n == 1) return {};
  if (n == 2) return {Edge{0, 1}};

  Vertex best_root = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(best_root)) best_root = v;
  }
  for (int attempt = 0; attempt < std::max(1, options.rounds); ++attempt) {
    std::vector<std::uint64_t> priority(n);
    Vertex root = best_root;
    if (attempt == 0) {
      std::iota(priority.begin(), priority.end(), 0);
    } else {
      std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
      for (auto& p : priority) p = rng();
      // Random root among the better-connected half.
      std::vector<Vertex> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : priority[a] < priority[b];
      });
      root = order[std::uniform_int_distribution<Vertex>(0, std::max<Vertex>(0, n / 2 - 1))(rng)];
    }
    HubTree t(g, k, std::move(priority));
    if (!t.run(root)) continue;
    std::vector<Edge> edges = t.edges();
    if (verified(g, edges, k)) return edges;
  }
  if (n <= options.exact_fallback_max_n) {
    const ExactResult r = decide_2k_st_exact(g, k, options.exact_budget);
    if (r.outcome == ExactOutcome::kWitness) return r.witness;
    throw Error(ErrorCode::kSurrogateFailed, r.outcome == ExactOutcome::kNone
                                                 ? "graph has no [2,k]-ST (exhaustive search)"
                                                 : "greedy rounds and exhaustive search budget exhausted");
  }
  throw Error(ErrorCode::kSurrogateFailed,
              "no [2,k]-ST found after " + std::to_string(options.rounds) + " greedy rounds");
}

}  // namespace histk
