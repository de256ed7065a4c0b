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

#ifndef HISTK_CONSTRUCTIVE_HPP_
#define HISTK_CONSTRUCTIVE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "histk/error.hpp"
#include "histk/families.hpp"
#include "histk/graph.hpp"
#include "histk/trace.hpp"

namespace histk {

/// kStrict checks the degree hypotheses (including the n0 / n1 gates) and
/// throws Error(kHypothesisViolation) when they fail. kPermissive runs the
/// same steps on any connected graph and reports failures instead.
enum class Mode { kStrict, kPermissive };

/// A construction failure, carrying the trace up to the failing step.
class ConstructionError : public Error {
 public:
  ConstructionError(ErrorCode code, const std::string& message, ConstructionTrace trace)
      : Error(code, message), trace_(std::move(trace)) {}
  const ConstructionTrace& trace() const { return trace_; }

 private:
  ConstructionTrace trace_;
};

struct SurrogateOptions {
  std::uint64_t seed = 0;
  int rounds = 32;
  // Graphs this small fall back to exhaustive search when every greedy
  // round fails.
  Vertex exact_fallback_max_n = 16;
  std::uint64_t exact_budget = 50'000'000;
};

struct CutCompoBound {
  int cut = 0;    // number of cut vertices
  int compo = 0;  // number of components
  bool holds = false;  // cut + compo - 1 <= 2 sqrt(n), decided exactly
};

/// Throws Error(kHypothesisViolation) unless min degree >= 2 sqrt(n).
CutCompoBound check_cut_compo_bound(const Graph& g);

/// X subset of N(u) \ y with |X| = m and g - X connected, built by
/// repeatedly deleting the lowest-id neighbour of u outside y that is not a
/// cut vertex of what is left. Strict mode first checks connectivity and
/// min degree >= 2 sqrt(n) + m + |y|. Throws Error(kNoSafeNeighbor) when
/// no such neighbour remains. Result ascending.
std::vector<Vertex> peel_neighbors(const Graph& g, Vertex u, std::span<const Vertex> y, int m,
                                   Mode mode = Mode::kStrict);

/// Edges in the ids of the input graph, plus the audit trail.
struct Construction {
  std::vector<Edge> edges;
  ConstructionTrace trace;
};

/// Spanning forest with exactly |u_set| components, each holding one vertex
/// of u_set and (k, that vertex)-good. Strict mode requires
/// min degree >= c_k sqrt(n) + (k+1)|u_set| - 1.
Construction build_good_forest(const Graph& g, int k, std::span<const Vertex> u_set, Mode mode,
                               const SurrogateOptions& options = {});

/// Spanning (k, u_set)-good tree. Strict mode requires
/// min degree >= c_k sqrt(n) + k|u_set| - 1.
Construction build_good_tree(const Graph& g, int k, std::span<const Vertex> u_set, Mode mode,
                             const SurrogateOptions& options = {});

/// [2,k]-ST of a connected graph by randomized greedy hub growth and local
/// repair, verified before returning. Attempt 0 is deterministic; later
/// attempts reseed from options.seed. Small graphs fall back to exact
/// search. Throws Error(kSurrogateFailed) if nothing verified is found.
std::vector<Edge> solve_high_degree(const Graph& g, int k, const SurrogateOptions& options = {});

enum class SigmaBound {
  kNMinus2,  // sigma2 >= n - 2, n >= n0(k)
  kHalf,     // sigma2 >= (n + 2k - 2) / 2, n >= n1(k)
};

enum class Outcome { kWitness, kObstruction };

struct Obstruction {
  // Four-part family structure (n - 2 bound).
  std::optional<LPartition> partition;
  // k-blocking set (half bound).
  std::vector<Vertex> blocking_set;
  std::string description;
};

struct PipelineResult {
  Outcome outcome = Outcome::kWitness;
  std::vector<Edge> tree;  // verified [2,k]-ST when outcome == kWitness
  std::optional<Obstruction> obstruction;
  ConstructionTrace trace;
};

/// Degree-sum pipeline. Either a verified [2,k]-ST or a verified
/// obstruction (four-part partition / k-blocking set).
PipelineResult construct_sigma2(const Graph& g, int k, SigmaBound bound, Mode mode,
                                const SurrogateOptions& options = {});

/// Degree-product pipeline (pi2 >= p_k n). Always a witness on success.
PipelineResult construct_pi2(const Graph& g, int k, Mode mode, const SurrogateOptions& options = {});

/// Minimum-degree entry point: checks min degree >= c_k sqrt(n) in strict
/// mode, then runs the surrogate solver.
PipelineResult construct_min_degree(const Graph& g, int k, Mode mode, const SurrogateOptions& options = {});

enum class DominationRule {
  // Inclusion-minimal dominating sets; largest size, then largest degree
  // sum, then lexicographically smallest.
  kMinimalLargest,
  // Smallest size, then lexicographically smallest.
  kMinimum,
};

/// Subset of s sending an edge into every part of q. Only vertices of s
/// with a neighbour in some part are considered. Throws
/// Error(kPrecondition) if s does not dominate q and
/// Error(kConstructionFailed) if the subset enumeration budget runs out.
std::vector<Vertex> select_dominating(const Graph& g, std::span<const Vertex> s,
                                      const std::vector<std::vector<Vertex>>& q, DominationRule rule);

}  // namespace histk

#endif  // HISTK_CONSTRUCTIVE_HPP_
