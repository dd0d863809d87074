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

#ifndef PPSIGN_SIGNED_COUNT_HPP
#define PPSIGN_SIGNED_COUNT_HPP

#include <string>

#include "ppsign/number.hpp"
#include "ppsign/plane_partition.hpp"

namespace ppsign {

/// An exact result together with where it came from.
struct SignedCount {
  BigInt value;
  std::string method;
  SymmetryClass cls = SymmetryClass::Plain;
  BoxDims box;
  std::string sign_convention;
};

}  // namespace ppsign

#endif  // PPSIGN_SIGNED_COUNT_HPP
