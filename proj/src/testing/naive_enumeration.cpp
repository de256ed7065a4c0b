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

#include "histk/testing/naive_enumeration.hpp"

#include <numeric>

#include "histk/certificates.hpp"
#include "histk/forest.hpp"

namespace histk::testing {
namespace {

struct Enumerator {
  std::vector<Edge> all;
  Vertex n;
  const std::function<bool(const std::vector<Edge>&)>& visit;
  std::vector<Edge> chosen;
  std::uint64_t count = 0;

  static Vertex find(std::vector<Vertex>& parent, Vertex v) {
    while (parent[v] != v) v = parent[v];
    return v;
  }

  // Returns true when the visitor asked to stop.
  bool run(std::size_t i, std::vector<Vertex> parent) {
    if (static_cast<Vertex>(chosen.size()) == n - 1) {
      ++count;
      return visit(chosen);
    }
    if (all.size() - i < static_cast<std::size_t>(n - 1) - chosen.size()) return false;
    const Edge e = all[i];
    const Vertex a = find(parent, e.u);
    const Vertex b = find(parent, e.v);
    if (a != b) {
      std::vector<Vertex> joined = parent;
      joined[a] = b;
      chosen.push_back(e);
      if (run(i + 1, std::move(joined))) return true;
      chosen.pop_back();
    }
    return run(i + 1, std::move(parent));
  }
};

}  // namespace

std::uint64_t for_each_spanning_tree(const Graph& g, const std::function<bool(const std::vector<Edge>&)>& visit) {
  const Vertex n = g.order();
  if (n == 0) return 0;
  Enumerator e{g.edges(), n, visit, {}, 0};
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  e.run(0, std::move(parent));
  return e.count;
}

std::optional<std::vector<Edge>> naive_find_2k_st(const Graph& g, int k) {
  std::optional<std::vector<Edge>> found;
  for_each_spanning_tree(g, [&](const std::vector<Edge>& tree) {
    std::vector<int> degree(g.order(), 0);
    for (const Edge& e : tree) {
      ++degree[e.u];
      ++degree[e.v];
    }
    for (int d : degree) {
      if (d >= 2 && d <= k) return false;
    }
    found = tree;
    return true;
  });
  if (found && !verify_2k_st(SpanningForest(g, *found), k)) found.reset();
  return found;
}

std::uint64_t count_spanning_trees(const Graph& g) {
  return for_each_spanning_tree(g, [](const std::vector<Edge>&) { return false; });
}

}  // namespace histk::testing
