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

#include "histk/certificates.hpp"
#include "histk/constants.hpp"
#include "histk/constructive.hpp"
#include "histk/forest.hpp"
#include "good_trees_internal.hpp"

namespace histk {
namespace {

// d >= 2 sqrt(n) + extra, exactly.
bool meets_twice_sqrt(std::int64_t d, std::int64_t extra, std::int64_t n) {
  const std::int64_t y = d - extra;
  return y >= 0 && y * y >= 4 * n;
}

void require_vertex_set(const Graph& g, std::span<const Vertex> vs, const char* what) {
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " has repeated vertices");
  }
  for (Vertex v : sorted) {
    if (!g.contains(v)) throw Error(ErrorCode::kInvalidInput, std::string(what) + " has a vertex outside the graph");
  }
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw Error(ErrorCode::kPrecondition, std::string(who) + " needs a connected graph");
}

std::vector<Vertex> sorted_copy(std::span<const Vertex> vs) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> to_host_edges(std::span<const Edge> edges, std::span<const Vertex> to_host) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(make_edge(to_host[e.u], to_host[e.v]));
  return out;
}

std::vector<Edge> surrogate_or_throw(const Graph& g, int k, const SurrogateOptions& options,
                                     const ConstructionTrace& trace) {
  try {
    return solve_high_degree(g, k, options);
  } catch (const Error& e) {
    throw ConstructionError(e.code(), e.what(), trace);
  }
}

std::vector<Vertex> peel_or_throw(const Graph& g, Vertex u, std::span<const Vertex> y, int m,
                                  const ConstructionTrace& trace) {
  try {
    return peel_neighbors(g, u, y, m, Mode::kPermissive);
  } catch (const Error& e) {
    throw ConstructionError(e.code(), e.what(), trace);
  }
}

Construction forest_recursive(const Graph& g, int k, std::vector<Vertex> u_set, const SurrogateOptions& options) {
  Construction out;
  out.trace.procedure = "good-forest";
  const Vertex anchor = u_set.back();
  u_set.pop_back();
  const std::vector<Vertex> x = peel_or_throw(g, anchor, u_set, k, out.trace);
  out.trace.peel_log.push_back({anchor, x});
  for (Vertex v : x) out.edges.push_back(make_edge(anchor, v));

  if (u_set.empty()) {
    const InducedSubgraph rest = remove_vertices(g, x);
    const std::vector<Edge> t0 = surrogate_or_throw(rest.graph, k, options, out.trace);
    const std::vector<Edge> mapped = to_host_edges(t0, rest.to_host);
    out.edges.insert(out.edges.end(), mapped.begin(), mapped.end());
    out.trace.notes.push_back("single root: surrogate tree on the graph minus the peeled set");
    return out;
  }

  std::vector<Vertex> cut = x;
  cut.push_back(anchor);
  const InducedSubgraph rest = remove_vertices(g, cut);
  const Components comps = components(rest.graph);
  std::vector<char> in_u(static_cast<std::size_t>(g.order()), 0);
  for (Vertex u : u_set) in_u[u] = 1;
  for (const auto& part : comps.parts) {
    std::vector<Vertex> host_part;
    for (Vertex v : part) host_part.push_back(rest.to_host[v]);
    out.trace.components.push_back(host_part);
    std::vector<Vertex> roots;
    for (Vertex v : host_part) {
      if (in_u[v]) roots.push_back(v);
    }
    if (roots.empty()) {
      // No root inside: hang the component off the anchor.
      Vertex attach = -1;
      for (Vertex v : host_part) {
        if (g.has_edge(anchor, v)) {
          attach = v;
          break;
        }
      }
      if (attach == -1) {
        throw ConstructionError(ErrorCode::kConstructionFailed, "component without a root misses the anchor",
                                out.trace);
      }
      roots.push_back(attach);
      out.edges.push_back(make_edge(anchor, attach));
    }
    Construction sub = good_forest_on(g, host_part, roots, k, options);
    out.edges.insert(out.edges.end(), sub.edges.begin(), sub.edges.end());
    out.trace.subcalls.push_back(std::move(sub.trace));
  }
  return out;
}

}  // namespace

Construction good_forest_on(const Graph& g, std::span<const Vertex> part, std::span<const Vertex> roots, int k,
                            const SurrogateOptions& options) {
  const InducedSubgraph sub = induced_subgraph(g, part);
  std::vector<Vertex> local;
  for (Vertex r : roots) local.push_back(sub.from_host[r]);
  std::sort(local.begin(), local.end());
  Construction c = forest_recursive(sub.graph, k, local, options);
  c.edges = to_host_edges(c.edges, sub.to_host);
  c.trace.remap(sub.to_host);
  return c;
}

Construction good_tree_on(const Graph& g, std::span<const Vertex> part, std::span<const Vertex> u_set, int k,
                          const SurrogateOptions& options) {
  const InducedSubgraph sub = induced_subgraph(g, part);
  std::vector<Vertex> local;
  for (Vertex r : u_set) local.push_back(sub.from_host[r]);
  Construction c = build_good_tree(sub.graph, k, local, Mode::kPermissive, options);
  c.edges = to_host_edges(c.edges, sub.to_host);
  c.trace.remap(sub.to_host);
  return c;
}

CutCompoBound check_cut_compo_bound(const Graph& g) {
  const std::int64_t n = g.order();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "empty graph");
  if (!meets_twice_sqrt(g.min_degree(), 0, n)) {
    throw Error(ErrorCode::kHypothesisViolation, "min degree below 2 sqrt(n)");
  }
  CutCompoBound r;
  r.cut = static_cast<int>(cut_vertices(g).size());
  r.compo = static_cast<int>(components(g).count());
  const std::int64_t lhs = r.cut + r.compo - 1;
  r.holds = lhs < 0 || lhs * lhs <= 4 * n;
  return r;
}

std::vector<Vertex> peel_neighbors(const Graph& g, Vertex u, std::span<const Vertex> y, int m, Mode mode) {
  if (!g.contains(u)) throw Error(ErrorCode::kInvalidInput, "anchor outside the graph");
  if (m < 0) throw Error(ErrorCode::kInvalidInput, "negative peel size");
  require_vertex_set(g, y, "excluded set");
  const std::vector<Vertex> excluded = sorted_copy(y);
  if (std::binary_search(excluded.begin(), excluded.end(), u)) {
    throw Error(ErrorCode::kInvalidInput, "anchor must not be excluded");
  }
  require_connected(g, "neighbour peeling");
  if (mode == Mode::kStrict &&
      !meets_twice_sqrt(g.min_degree(), m + static_cast<std::int64_t>(excluded.size()), g.order())) {
    throw Error(ErrorCode::kHypothesisViolation, "min degree below 2 sqrt(n) + m + |Y|");
  }
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  std::vector<Vertex> x;
  for (int step = 0; step < m; ++step) {
    const std::vector<Vertex> cuts = cut_vertices(g, alive);
    Vertex pick = -1;
    for (Vertex w : g.neighbors(u)) {
      if (!alive[w] || std::binary_search(excluded.begin(), excluded.end(), w)) continue;
      if (std::binary_search(cuts.begin(), cuts.end(), w)) continue;
      pick = w;
      break;
    }
    if (pick == -1) {
      throw Error(ErrorCode::kNoSafeNeighbor, "no non-cut neighbour of " + std::to_string(u) + " left after " +
                                                  std::to_string(step) + " removals");
    }
    alive[pick] = 0;
    x.push_back(pick);
  }
  std::sort(x.begin(), x.end());
  return x;
}

Construction build_good_forest(const Graph& g, int k, std::span<const Vertex> u_set, Mode mode,
                               const SurrogateOptions& options) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  if (u_set.empty()) throw Error(ErrorCode::kInvalidInput, "root set must be nonempty");
  require_vertex_set(g, u_set, "root set");
  require_connected(g, "good forest construction");
  const std::int64_t t = static_cast<std::int64_t>(u_set.size());
  if (mode == Mode::kStrict && compare_with_c_sqrt(g.min_degree() - (k + 1) * t + 1, 1, k, g.order()) < 0) {
    throw Error(ErrorCode::kHypothesisViolation, "min degree below c_k sqrt(n) + (k+1)|U| - 1");
  }
  const std::vector<Vertex> roots = sorted_copy(u_set);
  Construction c = forest_recursive(g, k, roots, options);
  std::sort(c.edges.begin(), c.edges.end());
  bool ok = false;
  try {
    ok = verify_good_forest(SpanningForest(g, c.edges), k, roots);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) throw ConstructionError(ErrorCode::kConstructionFailed, "good forest failed verification", c.trace);
  return c;
}

Construction build_good_tree(const Graph& g, int k, std::span<const Vertex> u_set, Mode mode,
                             const SurrogateOptions& options) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  if (u_set.empty()) throw Error(ErrorCode::kInvalidInput, "root set must be nonempty");
  require_vertex_set(g, u_set, "root set");
  require_connected(g, "good tree construction");
  const std::int64_t t = static_cast<std::int64_t>(u_set.size());
  if (mode == Mode::kStrict && compare_with_c_sqrt(g.min_degree() - k * t + 1, 1, k, g.order()) < 0) {
    throw Error(ErrorCode::kHypothesisViolation, "min degree below c_k sqrt(n) + k|U| - 1");
  }
  const std::vector<Vertex> us = sorted_copy(u_set);
  Construction c;
  c.trace.procedure = "good-tree";
  std::vector<Vertex> gone;
  for (Vertex u : us) {
    const InducedSubgraph cur = remove_vertices(g, gone);
    std::vector<Vertex> others;
    for (Vertex w : us) {
      if (w != u) others.push_back(cur.from_host[w]);
    }
    std::vector<Vertex> x = peel_or_throw(cur.graph, cur.from_host[u], others, k - 1, c.trace);
    for (Vertex& v : x) v = cur.to_host[v];
    std::sort(x.begin(), x.end());
    c.trace.peel_log.push_back({u, x});
    for (Vertex v : x) {
      c.edges.push_back(make_edge(u, v));
      gone.push_back(v);
    }
  }
  const InducedSubgraph rest = remove_vertices(g, gone);
  const std::vector<Edge> t0 = surrogate_or_throw(rest.graph, k, options, c.trace);
  const std::vector<Edge> mapped = to_host_edges(t0, rest.to_host);
  c.edges.insert(c.edges.end(), mapped.begin(), mapped.end());
  std::sort(c.edges.begin(), c.edges.end());
  bool ok = false;
  try {
    ok = verify_good_tree(SpanningForest(g, c.edges), GoodnessSpec{k, us});
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) throw ConstructionError(ErrorCode::kConstructionFailed, "good tree failed verification", c.trace);
  return c;
}

}  // namespace histk
