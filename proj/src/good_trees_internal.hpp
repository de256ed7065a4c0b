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

#ifndef HISTK_SRC_GOOD_TREES_INTERNAL_HPP_
#define HISTK_SRC_GOOD_TREES_INTERNAL_HPP_

#include <span>

#include "histk/constructive.hpp"

namespace histk {

// Good forest / good tree on the subgraph induced by `part`, without the
// hypothesis check; edges and trace come back in g's ids.
Construction good_forest_on(const Graph& g, std::span<const Vertex> part, std::span<const Vertex> roots, int k,
                            const SurrogateOptions& options);
Construction good_tree_on(const Graph& g, std::span<const Vertex> part, std::span<const Vertex> u_set, int k,
                          const SurrogateOptions& options);

}  // namespace histk

#endif  // HISTK_SRC_GOOD_TREES_INTERNAL_HPP_
