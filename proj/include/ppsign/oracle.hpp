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

#ifndef PPSIGN_ORACLE_HPP
#define PPSIGN_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ppsign/number.hpp"
#include "ppsign/plane_partition.hpp"
#include "ppsign/signed_count.hpp"

namespace ppsign {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct OracleConfig {
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool parallel = true;
};

enum class WeightTag { SignedOrbits, QCubes, QOrbits, Plain };

struct WeightKind {
  WeightTag tag = WeightTag::Plain;
  Rational q = 1;
};

/// Calls `sink` for every member of the class in the box, in lexicographic
/// order of the row-major height matrix. Throws ResourceLimit when the
/// backtracking exceeds the node budget.
void enumerate_class(const BoxDims& box, SymmetryClass cls,
                     const std::function<void(const PlanePartition&)>& sink,
                     const OracleConfig& config = {});

std::vector<PlanePartition> collect_class(const BoxDims& box,
                                          SymmetryClass cls,
                                          const OracleConfig& config = {});

/// Sum of sign_weight over the class. Runs in parallel when configured.
SignedCount signed_count(const BoxDims& box, SymmetryClass cls,
                         const OracleConfig& config = {});

/// Single-threaded reference implementation of signed_count.
SignedCount signed_count_serial(const BoxDims& box, SymmetryClass cls,
                                const OracleConfig& config = {});

/// Sum over class members of q^statistic; SignedOrbits gives the signed count.
Rational weighted_count(const BoxDims& box, SymmetryClass cls,
                        const WeightKind& weight,
                        const OracleConfig& config = {});

inline constexpr int kDefaultVsasmLimit = 7;

/// Vertically symmetric n x n alternating sign matrices, by brute-force
/// monotone triangle generation. Zero for even n.
BigInt count_vsasm(int n, int limit = kDefaultVsasmLimit);

/// All n x n alternating sign matrices; the unfiltered count behind
/// count_vsasm.
BigInt count_asm(int n, int limit = kDefaultVsasmLimit);

}  // namespace ppsign

#endif  // PPSIGN_ORACLE_HPP
