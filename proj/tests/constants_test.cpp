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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "histk/constants.hpp"
#include "histk/error.hpp"

namespace histk {
namespace {

long double c_oracle(int k) {
  const long double kk = k;
  return std::sqrt(kk * (kk - 1) * (kk + 2 * std::sqrt(2 * kk) + 2));
}

// Expanded form p = (5c^2 + 3c sqrt(c^2 + 4k^2 + 8k + 4)) / 2 + k^2 + 2k + 1.
long double p_oracle(int k) {
  const long double c = c_oracle(k);
  const long double kk = k;
  return (5 * c * c + 3 * c * std::sqrt(c * c + 4 * kk * kk + 8 * kk + 4)) / 2 + kk * kk + 2 * kk + 1;
}

long double n0_expr(int k, long double n) { return n - 4 * c_oracle(k) * std::sqrt(n) - (2.0L * k * k + 4 * k + 4); }
long double n1_expr(int k, long double n) {
  return (n + 2.0L * k - 2) / 4 - 2 * c_oracle(k) * std::sqrt(n) - (k + 1.0L) * (k + 1);
}

// Least N such that expr >= 0 for every n >= N, scanning well past the root.
template <typename F>
std::int64_t threshold_by_scan(F expr, std::int64_t limit) {
  std::int64_t last_negative = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (expr(static_cast<long double>(n)) < 0) last_negative = n;
  }
  return last_negative + 1;
}

TEST(Constants, KTwoValues) {
  const Constants c = constants(2);
  EXPECT_EQ(c.c, 4.0);
  EXPECT_EQ(c.n0, 295);
  EXPECT_EQ(c.n1, 1091);
  EXPECT_NEAR(c.p, 92.2666153055679, 1e-9);
  EXPECT_NEAR(c.sqrt_p * c.sqrt_p, c.p, 1e-9);
}

TEST(Constants, RejectsSmallK) { EXPECT_THROW(constants(1), Error); }

TEST(Constants, MatchIndependentFormulas) {
  for (int k = 2; k <= 8; ++k) {
    const Constants c = constants(k);
    EXPECT_NEAR(c.c, static_cast<double>(c_oracle(k)), 1e-12 * c.c) << k;
    EXPECT_NEAR(c.p, static_cast<double>(p_oracle(k)), 1e-9 * c.p) << k;
    EXPECT_EQ(c.n0, threshold_by_scan([k](long double n) { return n0_expr(k, n); }, 4 * c.n0 + 1000)) << k;
    EXPECT_EQ(c.n1, threshold_by_scan([k](long double n) { return n1_expr(k, n); }, 4 * c.n1 + 1000)) << k;
  }
}

TEST(Constants, FrozenTable) {
  struct Row {
    int k;
    double c;
    std::int64_t n0, n1;
    double p;
  };
  const Row rows[] = {
      {3, 7.70674230225704, 1018, 3921, 292.897665377486},
      {4, 0, 2341, 9140, 649.477088513125},
      {5, 0, 4411, 17327, 1198.34520726641},
      {6, 0, 7365, 29033, 1974.08027155342},
  };
  for (const Row& r : rows) {
    const Constants c = constants(r.k);
    if (r.c > 0) {
      EXPECT_NEAR(c.c, r.c, 1e-12);
    }
    EXPECT_EQ(c.n0, r.n0);
    EXPECT_EQ(c.n1, r.n1);
    EXPECT_NEAR(c.p, r.p, 1e-9);
  }
}

TEST(Constants, BoundaryConditions) {
  EXPECT_TRUE(n0_condition(2, 295));
  EXPECT_FALSE(n0_condition(2, 294));
  EXPECT_TRUE(n1_condition(2, 1091));
  EXPECT_FALSE(n1_condition(2, 1090));
  for (int k = 2; k <= 6; ++k) {
    const Constants c = constants(k);
    EXPECT_FALSE(n0_condition(k, c.n0 - 1));
    EXPECT_FALSE(n1_condition(k, c.n1 - 1));
    for (std::int64_t n = c.n0; n < c.n0 + 2000; n += 7) EXPECT_TRUE(n0_condition(k, n));
    for (std::int64_t n = c.n1; n < c.n1 + 2000; n += 7) EXPECT_TRUE(n1_condition(k, n));
  }
}

TEST(CompareWithCSqrt, MatchesFloatAwayFromTies) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1'000'000);
    const std::int64_t coef = static_cast<std::int64_t>(rng() % 9);
    const std::int64_t y = static_cast<std::int64_t>(rng() % 200'000) - 50'000;
    const long double diff = y - coef * c_oracle(k) * std::sqrt(static_cast<long double>(n));
    if (std::fabs(diff) < 1e-6L) continue;
    EXPECT_EQ(compare_with_c_sqrt(y, coef, k, n), diff > 0 ? 1 : -1);
    ++checked;
  }
  EXPECT_GT(checked, 19000);
}

TEST(CompareWithCSqrt, ExactTieForKTwo) {
  // c_2 = 4: y = 4 sqrt(n) exactly when n is a square.
  EXPECT_EQ(compare_with_c_sqrt(40, 1, 2, 100), 0);
  EXPECT_EQ(compare_with_c_sqrt(39, 1, 2, 100), -1);
  EXPECT_EQ(compare_with_c_sqrt(41, 1, 2, 100), 1);
  EXPECT_TRUE(meets_high_degree(2, 300, 70));
  EXPECT_FALSE(meets_high_degree(2, 300, 69));
}

TEST(ProductGates, KTwo) {
  // sqrt(p_2 * 200) ~ 135.84.
  EXPECT_TRUE(below_sqrt_pk_n(2, 200, 135));
  EXPECT_FALSE(below_sqrt_pk_n(2, 200, 136));
  EXPECT_TRUE(meets_pk_n(2, 200, 136 * 136));
  EXPECT_FALSE(meets_pk_n(2, 5, 4));
}

TEST(Inequalities, BoundaryOfN0AndN1) {
  auto find = [](const InequalityReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
      if (c.name == name) return c;
    }
    ADD_FAILURE() << "missing " << name;
    return InequalityCheck{};
  };
  EXPECT_TRUE(find(verify_constant_inequalities(2, 295), "n0_bound").holds);
  EXPECT_FALSE(find(verify_constant_inequalities(2, 294), "n0_bound").holds);
  EXPECT_TRUE(find(verify_constant_inequalities(2, 1091), "n1_bound").holds);
  EXPECT_FALSE(find(verify_constant_inequalities(2, 1090), "n1_bound").holds);
  const InequalityCheck m3 = find(verify_constant_inequalities(2, 300), "pk_identity");
  EXPECT_NEAR(m3.lhs, 9.0, 9e-9);
}

TEST(Inequalities, AllHoldPastThresholds) {
  for (int k = 2; k <= 6; ++k) {
    const Constants c = constants(k);
    for (std::int64_t n : {c.n0, c.n0 + 1, c.n1, c.n1 + 17, 10 * c.n1}) {
      EXPECT_TRUE(verify_constant_inequalities(k, n).all_hold) << k << " " << n;
    }
  }
}

}  // namespace
}  // namespace histk
