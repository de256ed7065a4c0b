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

#ifndef HISTK_FAMILIES_HPP_
#define HISTK_FAMILIES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "histk/graph.hpp"
#include "histk/hypothesis.hpp"

namespace histk {

using Labels = std::vector<std::pair<std::string, std::vector<Vertex>>>;

struct FamilyParams {
  int k = 2;
  // |L1|, |L2|, |L3|, |L4| for the four-part family.
  std::array<int, 4> sizes{};
  // Order of the three-clique family.
  Vertex n = 0;
  // L3-internal non-edges to try to add, each kept only if every L3 degree
  // stays >= n - |L1 u L2| - 1.
  int l3_missing = 0;
  std::uint64_t seed = 0;
};

/// L1..L4, each ascending.
struct LPartition {
  std::array<std::vector<Vertex>, 4> parts;
};

struct LFamilyInstance {
  Graph graph;
  LPartition partition;
  Labels labels() const;
};

/// Four-part extremal family: L1 u L2 and L4 cliques, L1 sees nothing in
/// L3 u L4, each L2 vertex has an L3 neighbour, no L4 neighbour and degree
/// <= k, each L3 vertex has an L2 neighbour, sees all of L4 and has degree
/// >= n - |L1 u L2| - 1. Vertices are numbered L1, L2, L3, L4 in order.
/// Default L2-L3 pattern pairs L2[t mod |L2|] with L3[t mod |L3|] for
/// t < max(|L2|, |L3|). Throws Error(kInfeasibleParams) if the result does
/// not satisfy the conditions.
LFamilyInstance gen_L_family(const FamilyParams& params);

/// nullopt if `p` is a valid four-part partition of g for k, otherwise the
/// first violated condition.
std::optional<std::string> validate_L_partition(const Graph& g, int k, const LPartition& p);

/// Recovers the partition when g belongs to the family. For n >= 2k + 2,
/// L1 u L2 is exactly the set of vertices of degree <= k, which pins the
/// rest down.
std::optional<LPartition> recognize_L_family(const Graph& g, int k);

struct GPrimeInstance {
  Graph graph;
  Vertex u = 0, v1 = 1, v2 = 2;
  std::vector<Vertex> a1, a2, w1, w2;
  Labels labels() const;
};

/// Triangle {u, v1, v2} plus cliques A1, A2 of (n-3)/2 vertices each; u is
/// joined to W1 (k-1 vertices of A1), v1 and v2 to W2 (k-1 vertices of A2).
/// Requires n odd and (n-3)/2 >= k+2, else Error(kInfeasibleParams). At
/// (n-3)/2 = k+1 two non-W vertices of A1 and A2 would have degree sum
/// n-5, below (n+2k-3)/2.
GPrimeInstance gen_Gprime(int k, Vertex n);

enum class RandomShape {
  kAuto,
  kDense,            // random graph repaired up to a degree floor
  kLowClique,        // small clique of low vertices hanging off a near-complete graph
  kHub,              // two cliques plus a vertex adjacent to everything
  kTwoSided,         // low clique split between two cliques, |S| >= 2k
  kBalanced,         // two low vertices, one per clique, degrees in [k+1, 2k-1]
  kSplit,            // two low vertices, one per clique, one of degree >= 2k
  kPairIntoOne,      // low vertices of degree <= k into one near-complete graph
  kSingleDominator,  // one low vertex touching both of two cliques
  kLowVertex,        // one low vertex into a complete graph (product condition)
};

std::string_view to_string(RandomShape shape);
std::optional<RandomShape> parse_random_shape(std::string_view text);

/// Connected graph of order n meeting the degree bound of `kind` (the n0 /
/// n1 gates are the caller's business). The bound is re-measured after
/// construction; generation is retried with fresh randomness and
/// Error(kUnsatisfiableParams) thrown if it keeps failing. kAuto picks a
/// shape compatible with (kind, k, n) from the seed. For the degree-sum
/// kinds the output is also checked to be outside the four-part family
/// (n - 2 bound) or free of k-blocking sets up to size k+2 (half bound).
Graph gen_random_hypothesis(HypothesisKind kind, int k, Vertex n, std::uint64_t seed,
                            RandomShape shape = RandomShape::kAuto);

/// Random connected graph with minimum degree >= floor.
Graph gen_min_degree_graph(Vertex n, int floor, std::uint64_t seed);

/// Random graph whose components are trees of dense blocks (cliques minus
/// a random matching) glued at cut vertices. Every block has at least
/// `min_block` vertices, so the minimum degree is >= min_block - 2.
Graph gen_block_graph(Vertex n, int min_block, int component_count, std::uint64_t seed);

}  // namespace histk

#endif  // HISTK_FAMILIES_HPP_
