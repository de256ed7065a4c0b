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

#include "histk/hypothesis.hpp"

#include "histk/constants.hpp"
#include "histk/error.hpp"

namespace histk {

HypothesisCheck check_hypothesis(const Graph& g, const DegreeProfile& profile, HypothesisKind kind, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
  const std::int64_t n = g.order();
  if (!is_connected(g)) return {false, "graph is disconnected"};
  const Constants cs = constants(k);
  switch (kind) {
    case HypothesisKind::kMinDegree:
      if (!meets_high_degree(k, n, profile.min_degree)) {
        return {false, "min degree " + std::to_string(profile.min_degree) + " < c_k sqrt(n)"};
      }
      return {true, "min degree >= c_k sqrt(n)"};
    case HypothesisKind::kSigma2NMinus2:
      if (n < cs.n0) return {false, "n = " + std::to_string(n) + " < n0 = " + std::to_string(cs.n0)};
      if (!profile.sigma2.is_infinite() && profile.sigma2.value() < n - 2) {
        return {false, "sigma2 = " + profile.sigma2.to_string() + " < n - 2"};
      }
      return {true, "n >= n0 and sigma2 >= n - 2"};
    case HypothesisKind::kSigma2Half:
      if (n < cs.n1) return {false, "n = " + std::to_string(n) + " < n1 = " + std::to_string(cs.n1)};
      if (!profile.sigma2.is_infinite() && 2 * profile.sigma2.value() < n + 2 * k - 2) {
        return {false, "sigma2 = " + profile.sigma2.to_string() + " < (n + 2k - 2) / 2"};
      }
      return {true, "n >= n1 and sigma2 >= (n + 2k - 2) / 2"};
    case HypothesisKind::kPi2:
      if (n < k + 2) return {false, "n < k + 2"};
      if (!profile.pi2.is_infinite() && !meets_pk_n(k, n, profile.pi2.value())) {
        return {false, "pi2 = " + profile.pi2.to_string() + " < p_k n"};
      }
      return {true, "n >= k + 2 and pi2 >= p_k n"};
  }
  return {false, "unknown hypothesis"};
}

HypothesisCheck check_hypothesis(const Graph& g, HypothesisKind kind, int k) {
  if (g.order() == 0) return {false, "empty graph"};
  return check_hypothesis(g, degree_profile(g), kind, k);
}

std::string_view to_string(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::kMinDegree: return "min-degree";
    case HypothesisKind::kSigma2NMinus2: return "sum-n-2";
    case HypothesisKind::kSigma2Half: return "sum-half";
    case HypothesisKind::kPi2: return "product";
  }
  return "unknown";
}

std::optional<HypothesisKind> parse_hypothesis_kind(std::string_view text) {
  if (text == "min-degree" || text == "c") return HypothesisKind::kMinDegree;
  if (text == "sum-n-2" || text == "2") return HypothesisKind::kSigma2NMinus2;
  if (text == "sum-half" || text == "3") return HypothesisKind::kSigma2Half;
  if (text == "product" || text == "4") return HypothesisKind::kPi2;
  return std::nullopt;
}

}  // namespace histk
