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

#include "ppsign/plane_partition.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ppsign/error.hpp"

namespace ppsign {

BoxDims make_box(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, ErrorKind::InvalidInput,
          "box sides must be nonnegative, got " +
              to_string(BoxDims{a, b, c}));
  return BoxDims{a, b, c};
}

std::string to_string(const BoxDims& box) {
  return std::to_string(box.a) + "x" + std::to_string(box.b) + "x" +
         std::to_string(box.c);
}

std::string_view to_string(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Plain: return "plain";
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::Cyclic: return "cyclic";
    case SymmetryClass::TotallySymmetric: return "totally-symmetric";
    case SymmetryClass::SC: return "sc";
    case SymmetryClass::TC: return "tc";
    case SymmetryClass::STC: return "stc";
    case SymmetryClass::CSTC: return "cstc";
    case SymmetryClass::CSSC: return "cssc";
    case SymmetryClass::TSSC: return "tssc";
  }
  return "?";
}

std::optional<SymmetryClass> parse_class(std::string_view name) {
  std::string s;
  for (char ch : name)
    if (ch != '-' && ch != '_')
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  struct Alias {
    const char* name;
    SymmetryClass cls;
  };
  static constexpr Alias aliases[] = {
      {"plain", SymmetryClass::Plain},
      {"pp", SymmetryClass::Plain},
      {"symmetric", SymmetryClass::Symmetric},
      {"spp", SymmetryClass::Symmetric},
      {"cyclic", SymmetryClass::Cyclic},
      {"cspp", SymmetryClass::Cyclic},
      {"totallysymmetric", SymmetryClass::TotallySymmetric},
      {"tspp", SymmetryClass::TotallySymmetric},
      {"sc", SymmetryClass::SC},
      {"scpp", SymmetryClass::SC},
      {"selfcomplementary", SymmetryClass::SC},
      {"tc", SymmetryClass::TC},
      {"tcpp", SymmetryClass::TC},
      {"transposecomplementary", SymmetryClass::TC},
      {"stc", SymmetryClass::STC},
      {"stcpp", SymmetryClass::STC},
      {"cstc", SymmetryClass::CSTC},
      {"cstcpp", SymmetryClass::CSTC},
      {"cssc", SymmetryClass::CSSC},
      {"csscpp", SymmetryClass::CSSC},
      {"tssc", SymmetryClass::TSSC},
      {"tsscpp", SymmetryClass::TSSC},
  };
  for (const auto& a : aliases)
    if (s == a.name) return a.cls;
  return std::nullopt;
}

bool has_complementation(SymmetryClass cls) {
  return complementation_map(cls).has_value();
}

void check_shape(const BoxDims& box, SymmetryClass cls) {
  const auto bad = [&](const char* need) {
    fail(ErrorKind::Shape, std::string(to_string(cls)) + " needs " + need +
                               ", got box " + to_string(box));
  };
  require(box.a >= 0 && box.b >= 0 && box.c >= 0, ErrorKind::InvalidInput,
          "negative box side in " + to_string(box));
  const bool cube = box.a == box.b && box.b == box.c;
  switch (cls) {
    case SymmetryClass::Plain:
    case SymmetryClass::SC:
      return;
    case SymmetryClass::Symmetric:
      if (box.a != box.b) bad("a == b");
      return;
    case SymmetryClass::Cyclic:
    case SymmetryClass::TotallySymmetric:
      if (!cube) bad("a == b == c");
      return;
    case SymmetryClass::TC:
    case SymmetryClass::STC:
      if (box.a != box.b || box.c % 2 != 0) bad("a == b and c even");
      return;
    case SymmetryClass::CSTC:
    case SymmetryClass::CSSC:
    case SymmetryClass::TSSC:
      if (!cube || box.a % 2 != 0) bad("a == b == c even");
      return;
  }
}

Cell apply(CellMap map, const Cell& x, const BoxDims& box) {
  switch (map) {
    case CellMap::Transpose: return {x.j, x.i, x.k};
    case CellMap::Rotate: return {x.j, x.k, x.i};
    case CellMap::Complement:
      return {box.a + 1 - x.i, box.b + 1 - x.j, box.c + 1 - x.k};
    case CellMap::TransposeComplement:
      return {box.a + 1 - x.j, box.a + 1 - x.i, box.c + 1 - x.k};
  }
  return x;
}

std::vector<CellMap> symmetry_generators(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Symmetric:
    case SymmetryClass::STC:
      return {CellMap::Transpose};
    case SymmetryClass::Cyclic:
    case SymmetryClass::CSTC:
    case SymmetryClass::CSSC:
      return {CellMap::Rotate};
    case SymmetryClass::TotallySymmetric:
    case SymmetryClass::TSSC:
      return {CellMap::Rotate, CellMap::Transpose};
    default:
      return {};
  }
}

std::optional<CellMap> complementation_map(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::SC:
    case SymmetryClass::CSSC:
    case SymmetryClass::TSSC:
      return CellMap::Complement;
    case SymmetryClass::TC:
    case SymmetryClass::STC:
    case SymmetryClass::CSTC:
      return CellMap::TransposeComplement;
    default:
      return std::nullopt;
  }
}

PlanePartition::PlanePartition(BoxDims box, std::vector<int> heights)
    : box_(box), heights_(std::move(heights)) {
  require(heights_.size() == static_cast<std::size_t>(box_.a) *
                                 static_cast<std::size_t>(box_.b),
          ErrorKind::Dimension,
          "height array has " + std::to_string(heights_.size()) +
              " entries, box " + to_string(box_) + " needs " +
              std::to_string(box_.a * box_.b));
  for (int r = 0; r < box_.a; ++r)
    for (int col = 0; col < box_.b; ++col) {
      const int h = height(r, col);
      const bool ok = h >= 0 && h <= box_.c &&
                      (r == 0 || height(r - 1, col) >= h) &&
                      (col == 0 || height(r, col - 1) >= h);
      require(ok, ErrorKind::InvalidInput,
              "not a plane partition in box " + to_string(box_) +
                  " at entry (" + std::to_string(r + 1) + "," +
                  std::to_string(col + 1) + ")");
    }
}

PlanePartition PlanePartition::from_rows(
    BoxDims box, const std::vector<std::vector<int>>& rows) {
  require(rows.size() == static_cast<std::size_t>(box.a), ErrorKind::Dimension,
          "expected " + std::to_string(box.a) + " rows, got " +
              std::to_string(rows.size()));
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(box.a) * static_cast<std::size_t>(box.b));
  for (const auto& row : rows) {
    require(row.size() == static_cast<std::size_t>(box.b), ErrorKind::Dimension,
            "expected rows of length " + std::to_string(box.b) + ", got " +
                std::to_string(row.size()));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return PlanePartition(box, std::move(flat));
}

PlanePartition PlanePartition::empty(BoxDims box) {
  return PlanePartition(box, std::vector<int>(
                                 static_cast<std::size_t>(box.a) *
                                 static_cast<std::size_t>(box.b), 0));
}

std::vector<std::vector<int>> PlanePartition::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(box_.a));
  for (int r = 0; r < box_.a; ++r)
    out[r].assign(heights_.begin() + r * box_.b,
                  heights_.begin() + (r + 1) * box_.b);
  return out;
}

long PlanePartition::volume() const {
  long v = 0;
  for (int h : heights_) v += h;
  return v;
}

bool is_valid_pp(const std::vector<std::vector<int>>& heights,
                 const BoxDims& box) {
  require(heights.size() == static_cast<std::size_t>(box.a),
          ErrorKind::Dimension,
          "expected " + std::to_string(box.a) + " rows, got " +
              std::to_string(heights.size()));
  for (const auto& row : heights)
    require(row.size() == static_cast<std::size_t>(box.b),
            ErrorKind::Dimension,
            "expected rows of length " + std::to_string(box.b) + ", got " +
                std::to_string(row.size()));
  for (int r = 0; r < box.a; ++r)
    for (int col = 0; col < box.b; ++col) {
      const int h = heights[r][col];
      if (h < 0 || h > box.c) return false;
      if (r > 0 && heights[r - 1][col] < h) return false;
      if (col > 0 && heights[r][col - 1] < h) return false;
    }
  return true;
}

namespace {

template <typename F>
void for_each_cell(const BoxDims& box, F&& f) {
  for (int i = 1; i <= box.a; ++i)
    for (int j = 1; j <= box.b; ++j)
      for (int k = 1; k <= box.c; ++k) f(Cell{i, j, k});
}

std::vector<Cell> closure(const Cell& x, std::span<const CellMap> gens,
                          const BoxDims& box) {
  std::set<Cell> seen{x};
  std::vector<Cell> stack{x};
  while (!stack.empty()) {
    const Cell y = stack.back();
    stack.pop_back();
    for (CellMap g : gens) {
      const Cell z = apply(g, y, box);
      if (seen.insert(z).second) stack.push_back(z);
    }
  }
  return {seen.begin(), seen.end()};
}

bool all_odd(const BoxDims& box) {
  return box.a % 2 == 1 && box.b % 2 == 1 && box.c % 2 == 1;
}

}  // namespace

bool satisfies(const PlanePartition& pp, SymmetryClass cls) {
  const BoxDims& box = pp.box();
  check_shape(box, cls);
  const auto gens = symmetry_generators(cls);
  const auto comp = complementation_map(cls);
  bool ok = true;
  for_each_cell(box, [&](const Cell& x) {
    if (!ok) return;
    const bool in = pp.contains(x);
    for (CellMap g : gens)
      if (pp.contains(apply(g, x, box)) != in) ok = false;
    if (comp && pp.contains(apply(*comp, x, box)) == in) ok = false;
  });
  return ok;
}

OrbitDecomposition orbit_decomposition(const BoxDims& box, SymmetryClass cls) {
  const auto comp = complementation_map(cls);
  if (!comp)
    fail(ErrorKind::UnsupportedClass,
         std::string(to_string(cls)) + " has no complementation");
  check_shape(box, cls);
  if (cls == SymmetryClass::SC && box.a > 0 && all_odd(box))
    fail(ErrorKind::Shape,
         "the centre cube of " + to_string(box) +
             " is fixed by complementation; no self-complementary plane "
             "partitions exist");
  const auto gens = symmetry_generators(cls);
  std::vector<CellMap> all = gens;
  all.push_back(*comp);

  OrbitDecomposition out;
  std::set<Cell> seen;
  for_each_cell(box, [&](const Cell& x) {
    if (seen.count(x)) return;
    const auto whole = closure(x, all, box);
    Orbit orbit;
    orbit.first = closure(x, gens, box);
    orbit.second = closure(apply(*comp, x, box), gens, box);
    const bool split = orbit.first.size() == orbit.second.size() &&
                       orbit.first.size() + orbit.second.size() == whole.size();
    require(split, ErrorKind::InternalConsistency,
            "orbit of " + std::to_string(x.i) + "," + std::to_string(x.j) +
                "," + std::to_string(x.k) + " does not split into halves");
    seen.insert(whole.begin(), whole.end());
    out.orbits.push_back(std::move(orbit));
  });
  return out;
}

std::vector<std::vector<Cell>> symmetry_orbits(const BoxDims& box,
                                               SymmetryClass cls) {
  check_shape(box, cls);
  const auto gens = symmetry_generators(cls);
  std::vector<std::vector<Cell>> out;
  std::set<Cell> seen;
  for_each_cell(box, [&](const Cell& x) {
    if (seen.count(x)) return;
    auto orbit = closure(x, gens, box);
    seen.insert(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  });
  return out;
}

PlanePartition reference_partition(const BoxDims& box, SymmetryClass cls) {
  if (!has_complementation(cls))
    fail(ErrorKind::UnsupportedClass,
         std::string(to_string(cls)) + " has no reference partition");
  check_shape(box, cls);
  std::vector<int> h(static_cast<std::size_t>(box.a) *
                     static_cast<std::size_t>(box.b));
  const auto at = [&](int i, int j) -> int& { return h[(i - 1) * box.b + (j - 1)]; };
  switch (cls) {
    case SymmetryClass::SC:
      if (box.c % 2 == 0) {
        std::fill(h.begin(), h.end(), box.c / 2);
      } else if (box.b % 2 == 0) {
        for (int i = 1; i <= box.a; ++i)
          for (int j = 1; j <= box.b / 2; ++j) at(i, j) = box.c;
      } else if (box.a % 2 == 0) {
        for (int i = 1; i <= box.a / 2; ++i)
          for (int j = 1; j <= box.b; ++j) at(i, j) = box.c;
      } else if (box.a > 0) {
        fail(ErrorKind::Shape, "no self-complementary plane partition in " +
                                   to_string(box));
      }
      break;
    case SymmetryClass::TC:
    case SymmetryClass::STC:
      std::fill(h.begin(), h.end(), box.c / 2);
      break;
    default: {
      const int alpha = box.a / 2;
      for (int i = 1; i <= box.a; ++i)
        for (int j = 1; j <= box.b; ++j) {
          const int low = (i <= alpha) + (j <= alpha);
          at(i, j) = low == 2 ? box.c : (low == 1 ? alpha : 0);
        }
    }
  }
  return PlanePartition(box, std::move(h));
}

SignContext::SignContext(const BoxDims& box, SymmetryClass cls)
    : box_(box),
      cls_(cls),
      orbits_(orbit_decomposition(box, cls)),
      reference_(reference_partition(box, cls)) {
  representatives_.reserve(orbits_.orbits.size());
  for (const auto& o : orbits_.orbits) {
    representatives_.push_back(o.first.front());
    reference_bits_.push_back(reference_.contains(o.first.front()));
  }
}

long SignContext::differing_orbits(const PlanePartition& pp) const {
  long d = 0;
  for (std::size_t r = 0; r < representatives_.size(); ++r)
    if (pp.contains(representatives_[r]) != reference_bits_[r]) ++d;
  return d;
}

int sign_weight(const PlanePartition& pp, const SignContext& ctx) {
  require(pp.box() == ctx.box(), ErrorKind::Dimension,
          "partition box differs from the sign context box");
  if (!satisfies(pp, ctx.cls()))
    fail(ErrorKind::InvalidInput,
         "plane partition is not in class " + std::string(to_string(ctx.cls())));
  return ctx.differing_orbits(pp) % 2 == 0 ? 1 : -1;
}

int sign_weight(const PlanePartition& pp, SymmetryClass cls) {
  return sign_weight(pp, SignContext(pp.box(), cls));
}

std::string to_string(const Octant& o) {
  std::string s;
  s += o.i_low ? "i<=alpha," : "i>alpha,";
  s += o.j_low ? "j<=alpha," : "j>alpha,";
  s += o.k_low ? "k<=alpha" : "k>alpha";
  return s;
}

long region_count(const PlanePartition& pp, SymmetryClass cls,
                  const Octant& octant) {
  const BoxDims& box = pp.box();
  check_shape(box, cls);
  long n = 0;
  switch (cls) {
    case SymmetryClass::TC:
      for (int i = 0; i < box.a; ++i)
        for (int j = 0; j < box.b; ++j)
          n += std::max(0, pp.height(i, j) - box.c / 2);
      return n;
    case SymmetryClass::STC:
      for (int i = 0; i < box.a; ++i)
        for (int j = i; j < box.b; ++j)
          n += std::max(0, pp.height(i, j) - box.c / 2);
      return n;
    case SymmetryClass::CSTC: {
      const int alpha = box.a / 2;
      for_each_cell(box, [&](const Cell& x) {
        if ((x.i <= alpha) == octant.i_low && (x.j <= alpha) == octant.j_low &&
            (x.k <= alpha) == octant.k_low && pp.contains(x))
          ++n;
      });
      return n;
    }
    default:
      fail(ErrorKind::UnsupportedClass,
           "no counting region for " + std::string(to_string(cls)));
  }
}

}  // namespace ppsign
