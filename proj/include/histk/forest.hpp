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

#ifndef HISTK_FOREST_HPP_
#define HISTK_FOREST_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "histk/graph.hpp"

namespace histk {

/// Acyclic edge subset of a host graph, spanning every host vertex. Each
/// component is rooted at its smallest vertex.
///
/// Holds a pointer to the host: the host graph must outlive the forest.
class SpanningForest {
 public:
  /// Throws Error(kInvalidInput) if an edge is missing from the host or the
  /// edges contain a cycle.
  SpanningForest(const Graph& host, std::vector<Edge> edges);

  const Graph& host() const { return *host_; }
  /// Normalised and sorted.
  std::span<const Edge> edges() const { return edges_; }
  int degree(Vertex v) const { return degree_[v]; }
  std::size_t component_count() const { return parts_.size(); }
  const std::vector<std::vector<Vertex>>& components() const { return parts_; }
  int component_of(Vertex v) const { return component_of_[v]; }
  std::span<const Vertex> roots() const { return roots_; }
  bool is_tree() const { return parts_.size() == 1; }

 private:
  const Graph* host_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<int> component_of_;
  std::vector<std::vector<Vertex>> parts_;
  std::vector<Vertex> roots_;
};

}  // namespace histk

#endif  // HISTK_FOREST_HPP_
