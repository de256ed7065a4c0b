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

#include "histk/certificates.hpp"

#include <algorithm>
#include <string>

#include "combinations.hpp"
#include "histk/error.hpp"

namespace histk {
namespace {

void require_k(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
}

bool in_forbidden_range(int degree, int k) { return degree >= 2 && degree <= k; }

}  // namespace

bool verify_spanning_tree(const SpanningForest& f) {
  // Construction already rules out cycles and foreign edges; a single
  // component over all host vertices is all that remains.
  return f.host().order() == 0 || f.is_tree();
}

CertificateReport check_2k_st(const SpanningForest& f, int k) {
  require_k(k);
  CertificateReport r;
  if (!verify_spanning_tree(f)) {
    r.reason = "not a spanning tree (" + std::to_string(f.component_count()) + " components)";
  }
  for (Vertex v = 0; v < f.host().order(); ++v) {
    if (in_forbidden_range(f.degree(v), k)) r.violations.push_back({v, f.degree(v)});
  }
  r.valid = r.reason.empty() && r.violations.empty();
  return r;
}

bool verify_2k_st(const SpanningForest& f, int k) { return check_2k_st(f, k).valid; }

namespace {

void check_component(const SpanningForest& f, std::span<const Vertex> part, const GoodnessSpec& spec,
                     CertificateReport& r) {
  std::vector<Vertex> exempt = spec.exempt;
  std::sort(exempt.begin(), exempt.end());
  for (Vertex v : part) {
    const int d = f.degree(v);
    const bool in_u = std::binary_search(exempt.begin(), exempt.end(), v);
    const bool ok = in_u ? d >= spec.k : (d == 1 || d >= spec.k + 1);
    if (!ok) r.violations.push_back({v, d});
  }
}

void require_host_vertices(const SpanningForest& f, const GoodnessSpec& spec) {
  require_k(spec.k);
  for (Vertex u : spec.exempt) {
    if (!f.host().contains(u)) throw Error(ErrorCode::kInvalidInput, "exempt vertex " + std::to_string(u) + " not in host");
  }
}

}  // namespace

CertificateReport check_good_tree(const SpanningForest& f, const GoodnessSpec& spec) {
  require_host_vertices(f, spec);
  CertificateReport r;
  if (!verify_spanning_tree(f)) {
    r.reason = "not a spanning tree (" + std::to_string(f.component_count()) + " components)";
  }
  std::vector<Vertex> all(static_cast<std::size_t>(f.host().order()));
  for (Vertex v = 0; v < f.host().order(); ++v) all[v] = v;
  check_component(f, all, spec, r);
  r.valid = r.reason.empty() && r.violations.empty();
  return r;
}

bool verify_good_tree(const SpanningForest& f, const GoodnessSpec& spec) { return check_good_tree(f, spec).valid; }

bool verify_good_component(const SpanningForest& f, int component, const GoodnessSpec& spec) {
  require_host_vertices(f, spec);
  if (component < 0 || component >= static_cast<int>(f.component_count())) {
    throw Error(ErrorCode::kInvalidInput, "no such forest component");
  }
  for (Vertex u : spec.exempt) {
    if (f.component_of(u) != component) {
      throw Error(ErrorCode::kInvalidInput, "exempt vertex " + std::to_string(u) + " outside the component");
    }
  }
  CertificateReport r;
  check_component(f, f.components()[component], spec, r);
  return r.violations.empty();
}

bool verify_good_forest(const SpanningForest& f, int k, std::span<const Vertex> roots) {
  require_k(k);
  if (f.component_count() != roots.size()) return false;
  std::vector<int> owner(f.component_count(), -1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!f.host().contains(roots[i])) return false;
    int& slot = owner[f.component_of(roots[i])];
    if (slot != -1) return false;
    slot = static_cast<int>(i);
  }
  for (std::size_t c = 0; c < f.component_count(); ++c) {
    if (!verify_good_component(f, static_cast<int>(c), GoodnessSpec{k, {roots[owner[c]]}})) return false;
  }
  return true;
}

bool is_k_blocking_set(const Graph& g, int k, std::span<const Vertex> u) {
  require_k(k);
  if (u.empty()) return false;
  const Vertex n = g.order();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v : u) {
    if (!g.contains(v)) return false;
    if (!in_forbidden_range(g.degree(v), k)) return false;
    removed[v] = 1;
  }
  const Components whole = components(g);
  // Count pieces of g - u per original component.
  std::vector<int> pieces(whole.count(), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    if (++pieces[whole.component_of[s]] >= 2) return true;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return false;
}

BlockingSearch search_k_blocking_set(const Graph& g, int k, int max_size) {
  require_k(k);
  BlockingSearch out;
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_forbidden_range(g.degree(v), k)) cand.push_back(v);
  }
  out.candidates = cand.size();
  const std::size_t limit = std::min(cand.size(), static_cast<std::size_t>(std::max(max_size, 0)));
  std::vector<Vertex> subset;
  for (std::size_t r = 1; r <= limit && !out.blocking_set; ++r) {
    internal::for_each_combination(cand.size(), r, [&](std::span<const std::size_t> idx) {
      ++out.subsets_checked;
      subset.clear();
      for (std::size_t i : idx) subset.push_back(cand[i]);
      if (is_k_blocking_set(g, k, subset)) {
        out.blocking_set = subset;
        return true;
      }
      return false;
    });
  }
  out.cap_binding = !out.blocking_set && cand.size() > limit;
  return out;
}

std::optional<std::vector<Vertex>> find_k_blocking_set(const Graph& g, int k, int max_size) {
  return search_k_blocking_set(g, k, max_size).blocking_set;
}

std::string_view to_string(ExactOutcome outcome) {
  switch (outcome) {
    case ExactOutcome::kWitness: return "WITNESS";
    case ExactOutcome::kNone: return "NONE";
    case ExactOutcome::kBudgetExhausted: return "BUDGET_EXHAUSTED";
  }
  return "UNKNOWN";
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), n_(g.order()), edges_(g.edges()) {
    incident_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
    state_.assign(edges_.size(), kUndecided);
    in_tree_.assign(static_cast<std::size_t>(n_), 0);
    tree_degree_.assign(static_cast<std::size_t>(n_), 0);
    avail_.assign(static_cast<std::size_t>(n_), 0);
    reached_.assign(static_cast<std::size_t>(n_), 0);
  }

  ExactResult run() {
    ExactResult r;
    if (n_ <= 1) {
      r.outcome = ExactOutcome::kWitness;
      return r;
    }
    in_tree_[0] = 1;
    tree_size_ = 1;
    const bool found = search();
    r.expansions = expansions_;
    if (found) {
      r.outcome = ExactOutcome::kWitness;
      r.witness = witness_;
    } else {
      r.outcome = exhausted_ ? ExactOutcome::kBudgetExhausted : ExactOutcome::kNone;
    }
    return r;
  }

 private:
  enum EdgeState : char { kUndecided, kIn, kOut };

  bool crosses(std::size_t e) const { return in_tree_[edges_[e].u] != in_tree_[edges_[e].v]; }

  bool search() {
    if (++expansions_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (tree_size_ == n_) {
      for (Vertex v = 0; v < n_; ++v) {
        if (in_forbidden_range(tree_degree_[v], k_)) return false;
      }
      witness_.clear();
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (state_[e] == kIn) witness_.push_back(edges_[e]);
      }
      return true;
    }
    // Degree pruning: a tree vertex already at degree >= 2 that cannot grow
    // past k is dead.
    std::fill(avail_.begin(), avail_.end(), 0);
    std::size_t frontier = edges_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (state_[e] != kUndecided || !crosses(e)) continue;
      const Vertex x = in_tree_[edges_[e].u] ? edges_[e].u : edges_[e].v;
      ++avail_[x];
      if (frontier == edges_.size()) frontier = e;
    }
    for (Vertex x = 0; x < n_; ++x) {
      if (in_tree_[x] && tree_degree_[x] >= 2 && tree_degree_[x] + avail_[x] <= k_) return false;
    }
    if (!remaining_connectable()) return false;
    if (frontier == edges_.size()) return false;

    const Edge e = edges_[frontier];
    const Vertex x = in_tree_[e.u] ? e.u : e.v;
    const Vertex y = x == e.u ? e.v : e.u;

    state_[frontier] = kIn;
    in_tree_[y] = 1;
    ++tree_size_;
    ++tree_degree_[x];
    ++tree_degree_[y];
    if (search()) return true;
    --tree_degree_[x];
    --tree_degree_[y];
    --tree_size_;
    in_tree_[y] = 0;
    if (exhausted_) {
      state_[frontier] = kUndecided;
      return false;
    }

    state_[frontier] = kOut;
    const bool found = search();
    state_[frontier] = kUndecided;
    return found;
  }

  // Every vertex outside the tree must still be reachable from the tree via
  // edges that are not excluded.
  bool remaining_connectable() {
    std::fill(reached_.begin(), reached_.end(), 0);
    stack_.clear();
    for (Vertex v = 0; v < n_; ++v) {
      if (in_tree_[v]) {
        reached_[v] = 1;
        stack_.push_back(v);
      }
    }
    while (!stack_.empty()) {
      const Vertex v = stack_.back();
      stack_.pop_back();
      for (std::size_t e : incident_[v]) {
        if (state_[e] == kOut) continue;
        const Vertex w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
        if (in_tree_[w] || reached_[w]) continue;
        reached_[w] = 1;
        stack_.push_back(w);
      }
    }
    return std::all_of(reached_.begin(), reached_.end(), [](char c) { return c != 0; });
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  Vertex n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<char> state_;
  std::vector<char> in_tree_;
  std::vector<int> tree_degree_;
  std::vector<int> avail_;
  std::vector<char> reached_;
  std::vector<Vertex> stack_;
  std::vector<Edge> witness_;
  Vertex tree_size_ = 0;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ExactResult decide_2k_st_exact(const Graph& g, int k, std::uint64_t budget) {
  require_k(k);
  if (!is_connected(g)) throw Error(ErrorCode::kPrecondition, "exact search needs a connected graph");
  ExactResult r = ExactSearch(g, k, budget).run();
  if (r.outcome == ExactOutcome::kWitness && g.order() > 1) {
    // Self-check; a failure here is a bug in the search.
    if (!verify_2k_st(SpanningForest(g, r.witness), k)) {
      throw Error(ErrorCode::kConstructionFailed, "exact search produced an invalid witness");
    }
  }
  return r;
}

}  // namespace histk
