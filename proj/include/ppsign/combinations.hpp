/*
 * Copyright 2026 The ppsign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPSIGN_COMBINATIONS_HPP
#define PPSIGN_COMBINATIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ppsign {

/// Advances `idx` (strictly increasing, values < n) to the next k-subset in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Number of k-subsets of an n-set, saturating at UINT64_MAX.
inline std::uint64_t choose_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

/// The k-subset of {0..n-1} at lexicographic position `rank`.
inline std::vector<std::size_t> unrank_combination(std::uint64_t rank,
                                                   std::size_t n,
                                                   std::size_t k) {
  std::vector<std::size_t> idx;
  idx.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (;; ++next) {
      const std::uint64_t rest = choose_u64(n - next - 1, k - slot - 1);
      if (rank < rest) break;
      rank -= rest;
    }
    idx.push_back(next++);
  }
  return idx;
}

}  // namespace ppsign

#endif  // PPSIGN_COMBINATIONS_HPP
