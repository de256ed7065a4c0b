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

#ifndef HISTK_SRC_COMBINATIONS_HPP_
#define HISTK_SRC_COMBINATIONS_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace histk::internal {

/// Visits every r-subset of {0..n-1} as an ascending index list, in
/// lexicographic order. The visitor returns true to stop early; the function
/// returns true iff it was stopped.
template <typename Visitor>
bool for_each_combination(std::size_t n, std::size_t r, Visitor&& visit) {
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (visit(std::span<const std::size_t>(idx))) return true;
    // Advance to the next combination.
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace histk::internal

#endif  // HISTK_SRC_COMBINATIONS_HPP_
