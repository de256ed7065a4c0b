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

#ifndef HISTK_GRAPH_HPP_
#define HISTK_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace histk {

using Vertex = std::int32_t;

/// Undirected edge. Graph and forest code keeps edges normalised so that
/// u < v; `make_edge` does the normalisation.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Integer with an explicit +infinity value. Used for sigma2/pi2, which are
/// infinite on complete graphs.
class ExtendedInt {
 public:
  constexpr ExtendedInt() = default;
  constexpr explicit ExtendedInt(std::int64_t value) : value_(value), infinite_(false) {}

  static constexpr ExtendedInt infinity() {
    ExtendedInt x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  std::int64_t value() const;

  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool infinite_ = true;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as sorted
/// adjacency arrays (CSR).
class Graph {
 public:
  Graph() = default;

  Vertex order() const { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  /// All edges, normalised and sorted lexicographically.
  std::vector<Edge> edges() const;
  int min_degree() const;
  int max_degree() const;

 private:
  friend Graph build_graph(Vertex n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Builds a graph from an edge list, dropping duplicate edges.
/// Throws Error(kInvalidInput) on self-loops or ids outside [0, n).
Graph build_graph(Vertex n, std::span<const Edge> edges);
Graph complete_graph(Vertex n);

struct DegreeProfile {
  int min_degree = 0;
  ExtendedInt sigma2;
  ExtendedInt pi2;
  // Nonadjacent pairs attaining sigma2 / pi2; empty when the graph is complete.
  std::optional<std::pair<Vertex, Vertex>> sigma2_witness;
  std::optional<std::pair<Vertex, Vertex>> pi2_witness;
};

/// O(n^2) scan over nonadjacent pairs. Throws Error(kInvalidInput) on the
/// empty graph.
DegreeProfile degree_profile(const Graph& g);

struct Components {
  std::vector<int> component_of;
  // Each part sorted ascending; parts ordered by their smallest vertex.
  std::vector<std::vector<Vertex>> parts;

  std::size_t count() const { return parts.size(); }
};

Components components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertices whose deletion increases the number of components, ascending.
std::vector<Vertex> cut_vertices(const Graph& g);

/// Same, restricted to the subgraph induced by `alive` (alive.size() == n).
std::vector<Vertex> cut_vertices(const Graph& g, const std::vector<char>& alive);

struct Block {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Edge> edges;       // ascending; empty for an isolated vertex
  // Contains exactly one cut vertex of its component.
  bool end_block = false;
  // Its component has no cut vertex, so the block is the whole component.
  bool whole_component = false;
};

/// Maximal 2-connected subgraphs and bridges; isolated vertices form
/// edgeless blocks. Blocks are ordered by their smallest edge (isolated
/// vertices by id) so the output is deterministic.
std::vector<Block> blocks(const Graph& g);

/// Induced subgraph together with the id maps back to the graph it was cut
/// from. from_host[v] is -1 for vertices that were dropped.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;
  std::vector<Vertex> from_host;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> xs);

bool is_clique(const Graph& g, std::span<const Vertex> s);

}  // namespace histk

#endif  // HISTK_GRAPH_HPP_
