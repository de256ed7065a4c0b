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

#include "histk/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "histk/error.hpp"

namespace histk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "INVALID_INPUT";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kHypothesisViolation: return "HYPOTHESIS_VIOLATION";
    case ErrorCode::kInfeasibleParams: return "INFEASIBLE_PARAMS";
    case ErrorCode::kUnsatisfiableParams: return "UNSATISFIABLE_PARAMS";
    case ErrorCode::kNoSafeNeighbor: return "NO_SAFE_NEIGHBOR";
    case ErrorCode::kSurrogateFailed: return "SURROGATE_FAILED";
    case ErrorCode::kConstructionFailed: return "CONSTRUCTION_FAILED";
  }
  return "UNKNOWN";
}

std::int64_t ExtendedInt::value() const {
  if (infinite_) throw std::logic_error("ExtendedInt::value() on infinity");
  return value_;
}

std::string ExtendedInt::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = (v == 0) ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

Graph build_graph(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::kInvalidInput, "negative vertex count");
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kInvalidInput, "vertex id out of range in edge (" + std::to_string(e.u) +
                                                "," + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) throw Error(ErrorCode::kInvalidInput, "self-loop at vertex " + std::to_string(e.u));
    list.push_back(make_edge(e.u, e.v));
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());

  Graph g;
  std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : list) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : list) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

DegreeProfile degree_profile(const Graph& g) {
  const Vertex n = g.order();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "degree profile of the empty graph");
  DegreeProfile p;
  p.min_degree = g.min_degree();
  p.sigma2 = ExtendedInt::infinity();
  p.pi2 = ExtendedInt::infinity();
  std::vector<char> adjacent(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) adjacent[w] = 1;
    const std::int64_t du = g.degree(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (adjacent[v]) continue;
      const std::int64_t dv = g.degree(v);
      ExtendedInt sum(du + dv);
      ExtendedInt product(du * dv);
      if (sum < p.sigma2) {
        p.sigma2 = sum;
        p.sigma2_witness = std::pair{u, v};
      }
      if (product < p.pi2) {
        p.pi2 = product;
        p.pi2_witness = std::pair{u, v};
      }
    }
    for (Vertex w : g.neighbors(u)) adjacent[w] = 0;
  }
  return p;
}

Components components(const Graph& g) {
  const Vertex n = g.order();
  Components c;
  c.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (c.component_of[s] != -1) continue;
    const int id = static_cast<int>(c.parts.size());
    c.parts.emplace_back();
    auto& part = c.parts.back();
    c.component_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (c.component_of[w] == -1) {
          c.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
  }
  return c;
}

bool is_connected(const Graph& g) { return components(g).count() <= 1; }

namespace {

// Iterative Hopcroft-Tarjan over the alive vertices. Reports cut flags and,
// when `out_blocks` is non-null, the edge sets of the blocks.
void biconnected(const Graph& g, const std::vector<char>& alive, std::vector<char>& is_cut,
                 std::vector<std::vector<Edge>>* out_blocks, std::vector<Vertex>* isolated) {
  const Vertex n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  is_cut.assign(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  std::vector<Edge> edge_stack;
  int time = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (!alive[root] || disc[root] != -1) continue;
    disc[root] = low[root] = time++;
    int root_children = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto nb = g.neighbors(v);
      if (next[v] < nb.size()) {
        const Vertex w = nb[next[v]++];
        if (!alive[w]) continue;
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          if (out_blocks) edge_stack.push_back(make_edge(v, w));
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v] && disc[w] < disc[v]) {
          low[v] = std::min(low[v], disc[w]);
          if (out_blocks) edge_stack.push_back(make_edge(v, w));
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[v];
      if (p == -1) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) is_cut[p] = 1;
        if (out_blocks) {
          const Edge tree_edge = make_edge(p, v);
          std::vector<Edge> block;
          while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == tree_edge) break;
          }
          out_blocks->push_back(std::move(block));
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
    if (root_children == 0 && isolated) isolated->push_back(root);
  }
}

}  // namespace

std::vector<Vertex> cut_vertices(const Graph& g, const std::vector<char>& alive) {
  std::vector<char> is_cut;
  biconnected(g, alive, is_cut, nullptr, nullptr);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  return cut_vertices(g, std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

std::vector<Block> blocks(const Graph& g) {
  const Vertex n = g.order();
  std::vector<char> is_cut;
  std::vector<std::vector<Edge>> edge_sets;
  std::vector<Vertex> isolated;
  biconnected(g, std::vector<char>(static_cast<std::size_t>(n), 1), is_cut, &edge_sets, &isolated);

  const Components comps = components(g);
  std::vector<char> comp_has_cut(comps.count(), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) comp_has_cut[comps.component_of[v]] = 1;
  }

  std::vector<Block> out;
  out.reserve(edge_sets.size() + isolated.size());
  for (auto& es : edge_sets) {
    Block b;
    std::sort(es.begin(), es.end());
    for (const Edge& e : es) {
      b.vertices.push_back(e.u);
      b.vertices.push_back(e.v);
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    b.edges = std::move(es);
    const int comp = comps.component_of[b.vertices.front()];
    const auto cuts = std::count_if(b.vertices.begin(), b.vertices.end(), [&](Vertex v) { return is_cut[v] != 0; });
    b.whole_component = !comp_has_cut[comp];
    b.end_block = comp_has_cut[comp] && cuts == 1;
    out.push_back(std::move(b));
  }
  for (Vertex v : isolated) {
    Block b;
    b.vertices = {v};
    b.whole_component = true;
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    if (a.edges.empty() != b.edges.empty()) return !a.edges.empty();
    if (!a.edges.empty()) return a.edges.front() < b.edges.front();
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph sub;
  sub.from_host.assign(static_cast<std::size_t>(g.order()), -1);
  sub.to_host.assign(keep.begin(), keep.end());
  std::sort(sub.to_host.begin(), sub.to_host.end());
  sub.to_host.erase(std::unique(sub.to_host.begin(), sub.to_host.end()), sub.to_host.end());
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    const Vertex v = sub.to_host[i];
    if (!g.contains(v)) throw Error(ErrorCode::kInvalidInput, "induced subgraph vertex out of range");
    sub.from_host[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_host[i])) {
      const Vertex j = sub.from_host[w];
      if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  sub.graph = build_graph(static_cast<Vertex>(sub.to_host.size()), edges);
  return sub;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> xs) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (Vertex x : xs) {
    if (!g.contains(x)) throw Error(ErrorCode::kInvalidInput, "removed vertex out of range");
    drop[x] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && !g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace histk
