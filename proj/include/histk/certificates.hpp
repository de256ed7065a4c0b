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

#ifndef HISTK_CERTIFICATES_HPP_
#define HISTK_CERTIFICATES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "histk/forest.hpp"
#include "histk/graph.hpp"

namespace histk {

/// Degree-exemption spec for (k, U)-good trees: vertices outside U must have
/// degree 1 or at least k+1, vertices in U at least k.
struct GoodnessSpec {
  int k = 2;
  std::vector<Vertex> exempt;
};

struct DegreeViolation {
  Vertex vertex = 0;
  int degree = 0;
};

struct CertificateReport {
  bool valid = false;
  std::vector<DegreeViolation> violations;
  // Structural problems (not spanning, several components, ...).
  std::string reason;
};

bool verify_spanning_tree(const SpanningForest& f);

/// Spanning tree with no vertex of degree in [2, k]. Requires k >= 2.
bool verify_2k_st(const SpanningForest& f, int k);
CertificateReport check_2k_st(const SpanningForest& f, int k);

/// (k, U)-good check of a spanning tree (single component).
/// Throws Error(kInvalidInput) if a vertex of U is not a host vertex.
bool verify_good_tree(const SpanningForest& f, const GoodnessSpec& spec);
CertificateReport check_good_tree(const SpanningForest& f, const GoodnessSpec& spec);

/// (k, U)-good check of one forest component. Throws Error(kInvalidInput)
/// if some vertex of U lies outside that component.
bool verify_good_component(const SpanningForest& f, int component, const GoodnessSpec& spec);

/// Every component holds exactly one vertex of `roots` and is (k, that
/// vertex)-good; the component count equals |roots|.
bool verify_good_forest(const SpanningForest& f, int k, std::span<const Vertex> roots);

/// A cutset of g all of whose vertices have host degree in [2, k]. For
/// disconnected g the set must split one of the components it meets.
bool is_k_blocking_set(const Graph& g, int k, std::span<const Vertex> u);

struct BlockingSearch {
  std::optional<std::vector<Vertex>> blocking_set;
  std::size_t candidates = 0;       // vertices with degree in [2, k]
  std::uint64_t subsets_checked = 0;
  bool cap_binding = false;         // none found, but larger subsets were not tried
};

/// Searches subsets of {v : 2 <= d(v) <= k} by increasing size, then
/// lexicographically, up to `max_size` elements.
BlockingSearch search_k_blocking_set(const Graph& g, int k, int max_size);
std::optional<std::vector<Vertex>> find_k_blocking_set(const Graph& g, int k, int max_size);
inline int default_blocking_cap(int k) { return k + 2; }

enum class ExactOutcome { kWitness, kNone, kBudgetExhausted };

struct ExactResult {
  ExactOutcome outcome = ExactOutcome::kNone;
  std::vector<Edge> witness;  // filled iff kWitness; already verified
  std::uint64_t expansions = 0;
};

/// Exhaustive search for a [2,k]-spanning tree. Grows one tree from vertex
/// 0, branching include/exclude on the lexicographically first frontier
/// edge. Throws Error(kPrecondition) on disconnected input.
ExactResult decide_2k_st_exact(const Graph& g, int k, std::uint64_t budget);

std::string_view to_string(ExactOutcome outcome);

}  // namespace histk

#endif  // HISTK_CERTIFICATES_HPP_
