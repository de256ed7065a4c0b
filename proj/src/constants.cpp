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

#include "histk/constants.hpp"

#include <cmath>

#include "histk/error.hpp"

namespace histk {
namespace {

using i128 = __int128;

void require_k(int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidInput, "k must be at least 2");
}

long double c_value(int k) {
  const long double kk = k;
  return std::sqrt(kk * (kk - 1) * (kk + 2 * std::sqrt(2 * kk) + 2));
}

long double sqrt_p_value(int k) {
  const long double c = c_value(k);
  const long double k1 = k + 1;
  return (3 * c + std::sqrt(c * c + 4 * k1 * k1)) / 2;
}

long double p_value(int k) {
  const long double s = sqrt_p_value(k);
  return s * s;
}

std::int64_t n0_offset(int k) { return 2LL * k * k + 4LL * k + 4; }

// n1 expression scaled by 4: (n + 2k - 2) - 4(k+1)^2 - 8c sqrt(n).
std::int64_t n1_offset(int k) { return 4LL * (k + 1) * (k + 1) - (2LL * k - 2); }

// Smallest n >= 1 with cond(n), given cond is monotone past a real root.
template <typename Cond>
std::int64_t threshold_from_root(long double root_sqrt, Cond cond) {
  std::int64_t n = static_cast<std::int64_t>(std::ceil(root_sqrt * root_sqrt));
  if (n < 1) n = 1;
  while (n > 1 && cond(n - 1)) --n;
  while (!cond(n)) ++n;
  return n;
}

}  // namespace

int compare_with_c_sqrt(std::int64_t y, std::int64_t coef, int k, std::int64_t n) {
  require_k(k);
  if (coef < 0 || n < 0) throw Error(ErrorCode::kInvalidInput, "negative coefficient or order");
  if (coef == 0 || n == 0) return (y > 0) - (y < 0);
  if (y < 0) return -1;
  // c^2 = a + b sqrt(2k)
  const i128 a = static_cast<i128>(k) * (k - 1) * (k + 2);
  const i128 b = static_cast<i128>(2) * k * (k - 1);
  const i128 scale = static_cast<i128>(coef) * coef * n;
  const i128 lhs = static_cast<i128>(y) * y - scale * a;
  const i128 rhs = scale * b;  // compare lhs with rhs * sqrt(2k)
  if (lhs < 0) return -1;
  const i128 l2 = lhs * lhs;
  const i128 r2 = rhs * rhs * (2 * k);
  return (l2 > r2) - (l2 < r2);
}

bool n0_condition(int k, std::int64_t n) {
  return compare_with_c_sqrt(n - n0_offset(k), 4, k, n) >= 0;
}

bool n1_condition(int k, std::int64_t n) {
  return compare_with_c_sqrt(n - n1_offset(k), 8, k, n) >= 0;
}

bool meets_high_degree(int k, std::int64_t n, std::int64_t min_degree) {
  return compare_with_c_sqrt(min_degree, 1, k, n) >= 0;
}

bool below_sqrt_pk_n(int k, std::int64_t n, std::int64_t x) {
  require_k(k);
  const long double xx = static_cast<long double>(x);
  return xx * xx < p_value(k) * static_cast<long double>(n);
}

bool meets_pk_n(int k, std::int64_t n, std::int64_t product) {
  require_k(k);
  return static_cast<long double>(product) >= p_value(k) * static_cast<long double>(n);
}

Constants constants(int k) {
  require_k(k);
  Constants out;
  out.k = k;
  const long double c = c_value(k);
  out.c = static_cast<double>(c);
  out.sqrt_p = static_cast<double>(sqrt_p_value(k));
  out.p = static_cast<double>(p_value(k));
  // sqrt(n) >= 2c + sqrt(4c^2 + C)
  const long double r0 = 2 * c + std::sqrt(4 * c * c + n0_offset(k));
  out.n0 = threshold_from_root(r0, [k](std::int64_t n) { return n0_condition(k, n); });
  // sqrt(n) >= 4c + sqrt(16c^2 + D)
  const long double r1 = 4 * c + std::sqrt(16 * c * c + n1_offset(k));
  out.n1 = threshold_from_root(r1, [k](std::int64_t n) { return n1_condition(k, n); });
  return out;
}

InequalityReport verify_constant_inequalities(int k, std::int64_t n) {
  require_k(k);
  const Constants cs = constants(k);
  const long double c = c_value(k);
  const long double sp = sqrt_p_value(k);
  const long double p = p_value(k);
  const long double rn = std::sqrt(static_cast<long double>(n));
  const long double kk = k;
  InequalityReport r;
  r.k = k;
  r.n = n;

  auto add = [&](std::string name, std::string statement, long double lhs, long double rhs, bool applies,
                 bool holds) {
    r.checks.push_back({std::move(name), std::move(statement), static_cast<double>(lhs),
                        static_cast<double>(rhs), applies, holds});
  };

  const bool past_n0 = n >= cs.n0;
  const bool past_n1 = n >= cs.n1;

  add("n0_bound", "n >= 4 c sqrt(n) + 2k^2 + 4k + 4", n, 4 * c * rn + n0_offset(k), past_n0,
      compare_with_c_sqrt(n - n0_offset(k), 4, k, n) >= 0);

  add("n1_bound", "(n+2k-2)/4 >= 2 c sqrt(n) + (k+1)^2", (n + 2 * kk - 2) / 4,
      2 * c * rn + (kk + 1) * (kk + 1), past_n1, n1_condition(k, n));

  {
    // n > (n+2k-2)/4 > c sqrt(n) + 3k^2 + 2k + 1
    const std::int64_t quarter4 = n + 2LL * k - 2;
    const bool first = 4 * n > quarter4;
    const bool second = compare_with_c_sqrt(quarter4 - 4 * (3LL * k * k + 2LL * k + 1), 4, k, n) > 0;
    add("n1_chain", "n > (n+2k-2)/4 > c sqrt(n) + 3k^2 + 2k + 1", (n + 2 * kk - 2) / 4,
        c * rn + 3 * kk * kk + 2 * kk + 1, past_n1, first && second);
  }

  add("n1_floor", "(n+2k-2)/4 > 5k^2 + 2k + 1", (n + 2 * kk - 2) / 4, 5 * kk * kk + 2 * kk + 1, past_n1,
      n + 2LL * k - 2 > 4 * (5LL * k * k + 2LL * k + 1));

  add("pk_margin", "c (sqrt(p) - c) - 1 > 0", c * (sp - c) - 1, 0, true, c * (sp - c) - 1 > 0);

  {
    const long double lhs = p - kk * sp / (sp - c);
    add("pk_ratio", "p - k sqrt(p) / (sqrt(p) - c) > 0", lhs, 0, true, lhs > 0);
  }

  {
    const long double lhs = (sp - 2 * c) * (sp - c);
    const long double rhs = (kk + 1) * (kk + 1);
    add("pk_identity", "(sqrt(p) - 2c)(sqrt(p) - c) = (k+1)^2", lhs, rhs, true,
        std::fabs(lhs - rhs) <= 1e-9L * rhs);
  }

  r.all_hold = true;
  for (const auto& ch : r.checks) {
    if (ch.applies && !ch.holds) r.all_hold = false;
  }
  return r;
}

}  // namespace histk
