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

#include "histk/forest.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "histk/error.hpp"

namespace histk {
namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

std::string edge_str(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

SpanningForest::SpanningForest(const Graph& host, std::vector<Edge> edges) : host_(&host), edges_(std::move(edges)) {
  const Vertex n = host.order();
  for (Edge& e : edges_) {
    if (!host.has_edge(e.u, e.v)) throw Error(ErrorCode::kInvalidInput, "forest edge " + edge_str(e) + " not in host");
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::kInvalidInput, "forest has a repeated edge");
  }
  DisjointSets dsu(static_cast<std::size_t>(n));
  degree_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    if (!dsu.unite(e.u, e.v)) throw Error(ErrorCode::kInvalidInput, "forest edges contain a cycle at " + edge_str(e));
    ++degree_[e.u];
    ++degree_[e.v];
  }
  component_of_.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    const auto root = static_cast<Vertex>(dsu.find(v));
    // The union rule keeps the smallest id as representative.
    if (root == v) {
      component_of_[v] = static_cast<int>(parts_.size());
      parts_.push_back({});
      roots_.push_back(v);
    }
    component_of_[v] = component_of_[root];
    parts_[component_of_[v]].push_back(v);
  }
}

}  // namespace histk
