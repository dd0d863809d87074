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

#include "ppsign/matrix.hpp"

#include <sstream>

namespace ppsign {

SkewMatrix::SkewMatrix(ExactMatrix m) : m_(std::move(m)) {
  require(m_.square(), ErrorKind::Dimension, "skew matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    require(m_(i, i) == 0, ErrorKind::InvalidInput,
            "skew matrix has nonzero diagonal entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      require(m_(i, j) == -m_(j, i), ErrorKind::InvalidInput,
              "matrix is not skew-symmetric at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
  }
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << to_decimal(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace ppsign
