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

#ifndef HISTK_HYPOTHESIS_HPP_
#define HISTK_HYPOTHESIS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "histk/graph.hpp"

namespace histk {

/// The four degree conditions under which a [2,k]-ST is guaranteed (or,
/// for the degree-sum ones, characterised).
enum class HypothesisKind {
  kMinDegree,       // delta >= c_k sqrt(n)
  kSigma2NMinus2,   // n >= n0(k), sigma2 >= n - 2
  kSigma2Half,      // n >= n1(k), sigma2 >= (n + 2k - 2) / 2
  kPi2,             // n >= k + 2, pi2 >= p_k n
};

struct Hypothesis {
  HypothesisKind kind = HypothesisKind::kMinDegree;
  int k = 2;
  bool strict = true;
};

struct HypothesisCheck {
  bool holds = false;
  std::string detail;  // the first failing condition, or a summary
};

/// Connectivity is part of every hypothesis.
HypothesisCheck check_hypothesis(const Graph& g, const DegreeProfile& profile, HypothesisKind kind, int k);
HypothesisCheck check_hypothesis(const Graph& g, HypothesisKind kind, int k);

std::string_view to_string(HypothesisKind kind);
/// Accepts "min-degree", "sum-n-2", "sum-half", "product" and the short
/// forms "c", "2", "3", "4".
std::optional<HypothesisKind> parse_hypothesis_kind(std::string_view text);

}  // namespace histk

#endif  // HISTK_HYPOTHESIS_HPP_
