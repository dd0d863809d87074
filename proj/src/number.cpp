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

#include "ppsign/number.hpp"

#include "ppsign/error.hpp"

namespace ppsign {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::UnsupportedClass: return "unsupported-class";
    case ErrorKind::UnsupportedCase: return "unsupported-case";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Division: return "division";
    case ErrorKind::SingularParameter: return "singular-parameter";
    case ErrorKind::NeedsMoreSamples: return "needs-more-samples";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

std::string to_decimal(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

BigInt factorial(long n) {
  require(n >= 0, ErrorKind::Domain,
          "factorial of negative argument " + std::to_string(n));
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace ppsign
