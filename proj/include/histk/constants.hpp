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

#ifndef HISTK_CONSTANTS_HPP_
#define HISTK_CONSTANTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace histk {

/// Degree-condition constants for a given k >= 2.
///   c      = sqrt(k(k-1)(k + 2 sqrt(2k) + 2))
///   sqrt_p = (3c + sqrt(c^2 + 4(k+1)^2)) / 2,   p = sqrt_p^2
///   n0     = least N with n - 4c sqrt(n) - (2k^2+4k+4) >= 0 for all n >= N
///   n1     = least N with (n+2k-2)/4 - 2c sqrt(n) - (k+1)^2 >= 0 for all n >= N
struct Constants {
  int k = 2;
  double c = 0;
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;
  double p = 0;
  double sqrt_p = 0;
};

/// Throws Error(kInvalidInput) for k < 2.
Constants constants(int k);

/// Sign of y - coef * c_k * sqrt(n), evaluated exactly in integers
/// (c_k^2 = a + b sqrt(2k) with integer a, b). Requires coef, n >= 0.
int compare_with_c_sqrt(std::int64_t y, std::int64_t coef, int k, std::int64_t n);

/// The defining expressions of n0 and n1, decided exactly.
bool n0_condition(int k, std::int64_t n);
bool n1_condition(int k, std::int64_t n);

/// delta >= c_k sqrt(n), exactly.
bool meets_high_degree(int k, std::int64_t n, std::int64_t min_degree);

/// x^2 < p_k * n in long double; used for the low-degree split of the
/// product condition.
bool below_sqrt_pk_n(int k, std::int64_t n, std::int64_t x);
/// product >= p_k * n in long double.
bool meets_pk_n(int k, std::int64_t n, std::int64_t product);

struct InequalityCheck {
  std::string name;
  std::string statement;
  double lhs = 0;
  double rhs = 0;
  bool applies = true;  // false when n is below the threshold that implies it
  bool holds = false;
};

struct InequalityReport {
  int k = 2;
  std::int64_t n = 0;
  std::vector<InequalityCheck> checks;
  bool all_hold = false;  // every applicable check holds
};

/// Evaluates the threshold facts at (k, n): the n0 bound, the three n1
/// consequences, and the three p_k facts (margin, ratio, identity; the
/// identity is an equality checked to 1e-9 relative).
InequalityReport verify_constant_inequalities(int k, std::int64_t n);

}  // namespace histk

#endif  // HISTK_CONSTANTS_HPP_
