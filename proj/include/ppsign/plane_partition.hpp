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

#ifndef PPSIGN_PLANE_PARTITION_HPP
#define PPSIGN_PLANE_PARTITION_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppsign {

/// Side lengths of the containing box. Zero sides are allowed: such a box
/// holds exactly one (empty) plane partition.
struct BoxDims {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const BoxDims&, const BoxDims&) = default;
};

BoxDims make_box(int a, int b, int c);
std::string to_string(const BoxDims& box);

/// 1-based unit cube coordinates.
struct Cell {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class SymmetryClass {
  Plain,
  Symmetric,
  Cyclic,
  TotallySymmetric,
  SC,
  TC,
  STC,
  CSTC,
  CSSC,
  TSSC,
};

inline constexpr std::array<SymmetryClass, 10> kAllClasses = {
    SymmetryClass::Plain, SymmetryClass::Symmetric, SymmetryClass::Cyclic,
    SymmetryClass::TotallySymmetric, SymmetryClass::SC, SymmetryClass::TC,
    SymmetryClass::STC, SymmetryClass::CSTC, SymmetryClass::CSSC,
    SymmetryClass::TSSC};

std::string_view to_string(SymmetryClass cls);

/// Accepts the short tags ("tc", "cssc", ...), the "...pp" spellings and the
/// enumerator names, case-insensitively.
std::optional<SymmetryClass> parse_class(std::string_view name);

bool has_complementation(SymmetryClass cls);

/// Throws Shape if the box does not fit the class.
void check_shape(const BoxDims& box, SymmetryClass cls);

/// The elementary cell maps. Rotate is (i,j,k) -> (j,k,i).
enum class CellMap { Transpose, Rotate, Complement, TransposeComplement };

Cell apply(CellMap map, const Cell& x, const BoxDims& box);

/// Generators of the class's symmetry group without complementation.
std::vector<CellMap> symmetry_generators(SymmetryClass cls);

/// The complementation map of the class, if any.
std::optional<CellMap> complementation_map(SymmetryClass cls);

/// Height-matrix view of a plane partition; cell (i,j,k) belongs to it iff
/// k <= height(i-1, j-1).
class PlanePartition {
 public:
  PlanePartition(BoxDims box, std::vector<int> heights);
  static PlanePartition from_rows(BoxDims box,
                                  const std::vector<std::vector<int>>& rows);
  static PlanePartition empty(BoxDims box);

  const BoxDims& box() const noexcept { return box_; }
  int height(int row, int col) const { return heights_[row * box_.b + col]; }
  std::span<const int> heights() const noexcept { return heights_; }
  std::vector<std::vector<int>> rows() const;

  bool contains(const Cell& x) const {
    return x.k <= heights_[(x.i - 1) * box_.b + (x.j - 1)];
  }
  long volume() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

 private:
  BoxDims box_;
  std::vector<int> heights_;
};

/// Rows and columns weakly decreasing, entries in [0, c]. Throws Dimension
/// if the array is not a x b.
bool is_valid_pp(const std::vector<std::vector<int>>& heights,
                 const BoxDims& box);

/// Every membership condition of the class, checked cell by cell.
bool satisfies(const PlanePartition& pp, SymmetryClass cls);

struct Orbit {
  /// `first` holds the smallest cell of the orbit (lexicographic in i,j,k).
  std::vector<Cell> first;
  std::vector<Cell> second;
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
};

OrbitDecomposition orbit_decomposition(const BoxDims& box, SymmetryClass cls);

/// Orbits of the non-complementation symmetry group on the box cells.
std::vector<std::vector<Cell>> symmetry_orbits(const BoxDims& box,
                                               SymmetryClass cls);

PlanePartition reference_partition(const BoxDims& box, SymmetryClass cls);

/// Precomputed orbits and reference for repeated sign evaluation.
class SignContext {
 public:
  SignContext(const BoxDims& box, SymmetryClass cls);

  SymmetryClass cls() const noexcept { return cls_; }
  const BoxDims& box() const noexcept { return box_; }
  const OrbitDecomposition& orbits() const noexcept { return orbits_; }
  const PlanePartition& reference() const noexcept { return reference_; }

  /// Number of orbits whose chosen half differs from the reference. The
  /// partition is assumed to satisfy the class.
  long differing_orbits(const PlanePartition& pp) const;

 private:
  BoxDims box_;
  SymmetryClass cls_;
  OrbitDecomposition orbits_;
  PlanePartition reference_;
  std::vector<Cell> representatives_;
  std::vector<bool> reference_bits_;
};

int sign_weight(const PlanePartition& pp, SymmetryClass cls);
int sign_weight(const PlanePartition& pp, const SignContext& ctx);

/// One eighth of the box: for each axis, whether the lower half (<= alpha) or
/// the upper half is meant.
struct Octant {
  bool i_low = true;
  bool j_low = false;
  bool k_low = false;

  friend bool operator==(const Octant&, const Octant&) = default;
};

std::string to_string(const Octant& o);

/// Octant used for the cyclically symmetric transpose-complementary weight.
inline constexpr Octant kCstcOctant{true, false, false};

/// Cubes of `pp` in the class's counting region: TC {k > c/2}, STC
/// {k > c/2, i <= j}, CSTC the given octant.
long region_count(const PlanePartition& pp, SymmetryClass cls,
                  const Octant& octant = kCstcOctant);

}  // namespace ppsign

#endif  // PPSIGN_PLANE_PARTITION_HPP
