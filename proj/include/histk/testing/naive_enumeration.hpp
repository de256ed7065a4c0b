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

#ifndef HISTK_TESTING_NAIVE_ENUMERATION_HPP_
#define HISTK_TESTING_NAIVE_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "histk/graph.hpp"

namespace histk::testing {

/// Visits every spanning tree of g (edge subsets of size n-1 without a
/// cycle) in lexicographic order of the sorted edge list. The visitor
/// returns true to stop. Returns the number of trees visited.
std::uint64_t for_each_spanning_tree(const Graph& g, const std::function<bool(const std::vector<Edge>&)>& visit);

/// First spanning tree with no vertex of degree in [2, k], or nullopt.
/// Meant for n <= 10 or so.
std::optional<std::vector<Edge>> naive_find_2k_st(const Graph& g, int k);

/// Number of spanning trees; brute force.
std::uint64_t count_spanning_trees(const Graph& g);

}  // namespace histk::testing

#endif  // HISTK_TESTING_NAIVE_ENUMERATION_HPP_
