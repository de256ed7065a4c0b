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

#ifndef HISTK_TRACE_HPP_
#define HISTK_TRACE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "histk/graph.hpp"

namespace histk {

/// Which branch of a pipeline produced the result.
enum class CaseTaken {
  kNone,
  kHighDegree,       // min degree >= c_k sqrt(n): surrogate solver on the whole graph
  kComplete,         // no vertex outside the low-degree clique: spanning star
  kSingleDominator,  // one low vertex of degree >= k+1 reaches every component
  kOneDominator,     // the chosen dominating set is a single vertex
  kDominatorPath,    // dominating set of size >= 2, enough spare low vertices
  kBalancedPair,     // two dominators, every low vertex of degree <= 2k-1
  kSplitPair,        // two dominators, one of degree >= 2k
  kProduct,          // product-condition assembly
  kObstruction,      // a certificate of non-existence was found
};

std::string_view to_string(CaseTaken c);

struct PeelStep {
  Vertex anchor = 0;
  std::vector<Vertex> removed;
};

/// Audit record of one construction call. Vertex ids are in the
/// coordinates of the graph handed to the call that returned it.
struct ConstructionTrace {
  std::string procedure;
  std::vector<Vertex> low_degree_set;
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> dominating_set;
  CaseTaken case_taken = CaseTaken::kNone;
  std::vector<PeelStep> peel_log;
  std::vector<std::string> notes;
  std::vector<ConstructionTrace> subcalls;

  /// Rewrites every vertex id v (recursively) to to_host[v].
  void remap(std::span<const Vertex> to_host);
};

/// Structured-text (JSON) rendering; key order and formatting are fixed so
/// equal traces give identical text.
std::string trace_to_json(const ConstructionTrace& trace, int indent = 2);

}  // namespace histk

#endif  // HISTK_TRACE_HPP_
