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

#include "ppsign/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <utility>

#include "ppsign/error.hpp"

namespace ppsign {

namespace {

// A pair constraint between cube `k` of the owning column and cube
// `other_k` of column `other`: equal membership, or opposite membership.
struct Edge {
  int k;
  int other;
  int other_k;
  bool equal;
};

struct Tally {
  std::uint64_t members = 0;
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  std::vector<std::uint64_t> cubes;
  std::vector<std::uint64_t> orbits;

  void merge(const Tally& t) {
    members += t.members;
    even += t.even;
    odd += t.odd;
    if (cubes.size() < t.cubes.size()) cubes.resize(t.cubes.size());
    for (std::size_t i = 0; i < t.cubes.size(); ++i) cubes[i] += t.cubes[i];
    if (orbits.size() < t.orbits.size()) orbits.resize(t.orbits.size());
    for (std::size_t i = 0; i < t.orbits.size(); ++i) orbits[i] += t.orbits[i];
  }
};

struct Probe {
  int col;
  int k;
};

struct LeafPlan {
  bool sign = false;
  bool cubes = false;
  bool orbits = false;
  std::vector<Probe> sign_probes;
  std::vector<bool> reference_bits;
  std::vector<Probe> orbit_probes;
};

// Search state at a given depth: heights of the assigned prefix and bounds
// for every column.
struct State {
  int depth = 0;
  std::vector<int> h;
  std::vector<int> lo;
  std::vector<int> hi;
};

class Enumerator {
 public:
  Enumerator(const BoxDims& box, SymmetryClass cls, std::uint64_t budget)
      : box_(box), cls_(cls), budget_(budget), ncols_(box.a * box.b) {
    check_shape(box, cls);
    adjacency_.resize(static_cast<std::size_t>(ncols_));
    const auto add = [&](const Cell& x, const Cell& y, bool equal) {
      adjacency_[static_cast<std::size_t>(col(x))].push_back({x.k, col(y), y.k, equal});
      adjacency_[static_cast<std::size_t>(col(y))].push_back({y.k, col(x), x.k, equal});
    };
    const auto gens = symmetry_generators(cls);
    const auto comp = complementation_map(cls);
    for (int i = 1; i <= box.a; ++i)
      for (int j = 1; j <= box.b; ++j)
        for (int k = 1; k <= box.c; ++k) {
          const Cell x{i, j, k};
          for (CellMap g : gens) add(x, apply(g, x, box), true);
          if (comp) add(x, apply(*comp, x, box), false);
        }
  }

  int ncols() const { return ncols_; }
  std::uint64_t nodes() const { return nodes_.load(); }

  State root() const {
    State s;
    s.h.assign(static_cast<std::size_t>(ncols_), 0);
    s.lo.assign(static_cast<std::size_t>(ncols_), 0);
    s.hi.assign(static_cast<std::size_t>(ncols_), box_.c);
    return s;
  }

  /// Children of `s` in ascending value order; false if `s` is dead.
  template <typename Visit>
  bool expand(const State& s, Visit&& visit) {
    std::vector<int> ub, lb;
    if (!tighten(s, ub, lb)) return true;
    const int p = s.depth;
    for (int v = lb[p]; v <= ub[p]; ++v) {
      count_node();
      State child = s;
      child.h[p] = v;
      child.lo[p] = child.hi[p] = v;
      child.depth = p + 1;
      if (!propagate(child, p, v)) continue;
      visit(std::move(child));
    }
    return true;
  }

  template <typename Leaf>
  void dfs(const State& s, Leaf& leaf) {
    if (s.depth == ncols_) {
      leaf(s);
      return;
    }
    expand(s, [&](State child) { dfs(child, leaf); });
  }

  /// Live states at the smallest depth whose frontier reaches `target`.
  std::vector<State> frontier(std::size_t target) {
    std::vector<State> level{root()};
    while (level.size() < target) {
      if (std::all_of(level.begin(), level.end(),
                      [&](const State& s) { return s.depth == ncols_; }))
        break;
      std::vector<State> next;
      for (const State& s : level) {
        if (s.depth == ncols_) {
          next.push_back(s);
          continue;
        }
        expand(s, [&](State child) { next.push_back(std::move(child)); });
      }
      level = std::move(next);
    }
    return level;
  }

  PlanePartition to_partition(const State& s) const {
    return PlanePartition(box_, s.h);
  }

 private:
  int col(const Cell& x) const { return (x.i - 1) * box_.b + (x.j - 1); }

  void count_node() {
    if (nodes_.fetch_add(1) + 1 > budget_)
      fail(ErrorKind::ResourceLimit,
           "enumeration of " + std::string(to_string(cls_)) + " in " +
               to_string(box_) + " exceeded the node budget of " +
               std::to_string(budget_));
  }

  // Bounds implied by monotonicity: ub runs forward (north-west neighbours),
  // lb runs backward (south-east neighbours).
  bool tighten(const State& s, std::vector<int>& ub, std::vector<int>& lb) const {
    const int a = box_.a, b = box_.b;
    ub = s.hi;
    lb = s.lo;
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < b; ++c) {
        const int p = r * b + c;
        if (r > 0) ub[p] = std::min(ub[p], ub[p - b]);
        if (c > 0) ub[p] = std::min(ub[p], ub[p - 1]);
      }
    for (int r = a - 1; r >= 0; --r)
      for (int c = b - 1; c >= 0; --c) {
        const int p = r * b + c;
        if (r + 1 < a) lb[p] = std::max(lb[p], lb[p + b]);
        if (c + 1 < b) lb[p] = std::max(lb[p], lb[p + 1]);
        if (lb[p] > ub[p]) return false;
      }
    return true;
  }

  bool propagate(State& s, int p, int v) const {
    for (const Edge& e : adjacency_[static_cast<std::size_t>(p)]) {
      const bool in = e.k <= v;
      const bool need = e.equal ? in : !in;
      if (e.other < s.depth || e.other == p) {
        if ((e.other_k <= s.h[e.other]) != need) return false;
        continue;
      }
      int& lo = s.lo[e.other];
      int& hi = s.hi[e.other];
      if (need)
        lo = std::max(lo, e.other_k);
      else
        hi = std::min(hi, e.other_k - 1);
      if (lo > hi) return false;
    }
    return true;
  }

  BoxDims box_;
  SymmetryClass cls_;
  std::uint64_t budget_;
  int ncols_;
  std::vector<std::vector<Edge>> adjacency_;
  std::atomic<std::uint64_t> nodes_{0};
};

LeafPlan make_plan(const BoxDims& box, SymmetryClass cls, bool sign,
                   bool cubes, bool orbits) {
  LeafPlan plan;
  plan.sign = sign;
  plan.cubes = cubes;
  plan.orbits = orbits;
  const auto probe = [&](const Cell& x) {
    return Probe{(x.i - 1) * box.b + (x.j - 1), x.k};
  };
  if (sign) {
    const SignContext ctx(box, cls);
    for (const auto& o : ctx.orbits().orbits) {
      plan.sign_probes.push_back(probe(o.first.front()));
      plan.reference_bits.push_back(ctx.reference().contains(o.first.front()));
    }
  }
  if (orbits)
    for (const auto& o : symmetry_orbits(box, cls))
      plan.orbit_probes.push_back(probe(o.front()));
  return plan;
}

void score(const LeafPlan& plan, const State& s, Tally& t) {
  ++t.members;
  if (plan.sign) {
    std::size_t d = 0;
    for (std::size_t r = 0; r < plan.sign_probes.size(); ++r) {
      const Probe& pr = plan.sign_probes[r];
      if ((pr.k <= s.h[pr.col]) != plan.reference_bits[r]) ++d;
    }
    ++(d % 2 == 0 ? t.even : t.odd);
  }
  if (plan.cubes) {
    std::size_t v = 0;
    for (int h : s.h) v += static_cast<std::size_t>(h);
    if (t.cubes.size() <= v) t.cubes.resize(v + 1);
    ++t.cubes[v];
  }
  if (plan.orbits) {
    std::size_t n = 0;
    for (const Probe& pr : plan.orbit_probes)
      if (pr.k <= s.h[pr.col]) ++n;
    if (t.orbits.size() <= n) t.orbits.resize(n + 1);
    ++t.orbits[n];
  }
}

Tally run_serial(Enumerator& en, const LeafPlan& plan) {
  Tally t;
  auto leaf = [&](const State& s) { score(plan, s, t); };
  en.dfs(en.root(), leaf);
  return t;
}

Tally run_parallel(Enumerator& en, const LeafPlan& plan) {
  const std::size_t target =
      64 * static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  const std::vector<State> front = en.frontier(target);
  std::vector<Tally> parts(front.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(front.size()); ++i) {
    try {
      Tally& t = parts[static_cast<std::size_t>(i)];
      auto leaf = [&](const State& s) { score(plan, s, t); };
      en.dfs(front[static_cast<std::size_t>(i)], leaf);
    } catch (...) {
#pragma omp critical(ppsign_oracle_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  Tally total;
  for (const Tally& t : parts) total.merge(t);
  return total;
}

Tally run(const BoxDims& box, SymmetryClass cls, const LeafPlan& plan,
          const OracleConfig& config, bool parallel) {
  Enumerator en(box, cls, config.node_budget);
  return parallel ? run_parallel(en, plan) : run_serial(en, plan);
}

Rational power(const Rational& q, std::size_t e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  return make_rational(num, den);
}

Rational evaluate(const std::vector<std::uint64_t>& hist, const Rational& q) {
  Rational total(0);
  for (std::size_t e = 0; e < hist.size(); ++e)
    if (hist[e] != 0) total += power(q, e) * Rational(BigInt(std::to_string(hist[e])));
  return total;
}

std::string reference_label(const BoxDims& box, SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::SC:
      if (box.c % 2 == 0) return "reference: half-full {k <= c/2}";
      if (box.b % 2 == 0) return "reference: half-slab {j <= b/2}";
      return "reference: half-slab {i <= a/2}";
    case SymmetryClass::TC:
    case SymmetryClass::STC:
      return "reference: half-full {k <= c/2}";
    default:
      return "reference: majority {at least two coordinates <= alpha}";
  }
}

SignedCount signed_count_impl(const BoxDims& box, SymmetryClass cls,
                              const OracleConfig& config, bool parallel) {
  if (!has_complementation(cls))
    fail(ErrorKind::UnsupportedClass,
         "signed count needs a complementation class, got " +
             std::string(to_string(cls)));
  check_shape(box, cls);
  SignedCount out;
  out.method = parallel ? "oracle" : "oracle-serial";
  out.cls = cls;
  out.box = box;
  if (cls == SymmetryClass::SC && box.a % 2 == 1 && box.b % 2 == 1 &&
      box.c % 2 == 1) {
    out.value = 0;
    out.sign_convention = "empty class";
    return out;
  }
  const LeafPlan plan = make_plan(box, cls, true, false, false);
  const Tally t = run(box, cls, plan, config, parallel);
  out.value = BigInt(std::to_string(t.even)) - BigInt(std::to_string(t.odd));
  out.sign_convention = reference_label(box, cls);
  return out;
}

}  // namespace

void enumerate_class(const BoxDims& box, SymmetryClass cls,
                     const std::function<void(const PlanePartition&)>& sink,
                     const OracleConfig& config) {
  Enumerator en(box, cls, config.node_budget);
  auto leaf = [&](const State& s) { sink(en.to_partition(s)); };
  en.dfs(en.root(), leaf);
}

std::vector<PlanePartition> collect_class(const BoxDims& box,
                                          SymmetryClass cls,
                                          const OracleConfig& config) {
  std::vector<PlanePartition> out;
  enumerate_class(box, cls, [&](const PlanePartition& pp) { out.push_back(pp); },
                  config);
  return out;
}

SignedCount signed_count(const BoxDims& box, SymmetryClass cls,
                         const OracleConfig& config) {
  return signed_count_impl(box, cls, config, config.parallel);
}

SignedCount signed_count_serial(const BoxDims& box, SymmetryClass cls,
                                const OracleConfig& config) {
  return signed_count_impl(box, cls, config, false);
}

Rational weighted_count(const BoxDims& box, SymmetryClass cls,
                        const WeightKind& weight, const OracleConfig& config) {
  switch (weight.tag) {
    case WeightTag::SignedOrbits:
      return Rational(signed_count(box, cls, config).value);
    case WeightTag::Plain: {
      const Tally t = run(box, cls, make_plan(box, cls, false, false, false),
                          config, config.parallel);
      return Rational(BigInt(std::to_string(t.members)));
    }
    case WeightTag::QCubes: {
      const Tally t = run(box, cls, make_plan(box, cls, false, true, false),
                          config, config.parallel);
      return evaluate(t.cubes, weight.q);
    }
    case WeightTag::QOrbits: {
      if (symmetry_generators(cls).empty())
        fail(ErrorKind::UnsupportedClass,
             "orbit weight needs a nontrivial symmetry group, " +
                 std::string(to_string(cls)) + " has none");
      check_shape(box, cls);
      const Tally t = run(box, cls, make_plan(box, cls, false, false, true),
                          config, config.parallel);
      return evaluate(t.orbits, weight.q);
    }
  }
  return Rational(0);
}

namespace {

// Monotone triangles of order n, generated from the fixed bottom row
// {1..n} upwards. Each complete triangle is converted to its ASM and handed
// to `visit`.
class TriangleWalker {
 public:
  TriangleWalker(int n, std::function<void(const std::vector<std::vector<int>>&)> visit)
      : n_(n), visit_(std::move(visit)), rows_(static_cast<std::size_t>(n)) {}

  void run() {
    auto& bottom = rows_[static_cast<std::size_t>(n_ - 1)];
    bottom.resize(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) bottom[static_cast<std::size_t>(x)] = x + 1;
    descend(n_ - 1);
  }

 private:
  void descend(int r) {
    if (r == 0) {
      emit();
      return;
    }
    auto& row = rows_[static_cast<std::size_t>(r - 1)];
    row.assign(static_cast<std::size_t>(r), 0);
    fill(r, 0);
  }

  // Row r-1 has r entries, interlacing the r+1 entries of row r:
  // below[j] <= row[j] <= below[j+1], strictly increasing.
  void fill(int r, int j) {
    const auto& below = rows_[static_cast<std::size_t>(r)];
    auto& row = rows_[static_cast<std::size_t>(r - 1)];
    if (j == r) {
      descend(r - 1);
      return;
    }
    int from = below[static_cast<std::size_t>(j)];
    if (j > 0) from = std::max(from, row[static_cast<std::size_t>(j - 1)] + 1);
    for (int v = from; v <= below[static_cast<std::size_t>(j + 1)]; ++v) {
      row[static_cast<std::size_t>(j)] = v;
      fill(r, j + 1);
    }
  }

  void emit() {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n_),
                                    std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (int r = 0; r < n_; ++r) {
      for (int x : rows_[static_cast<std::size_t>(r)]) ++m[r][x - 1];
      if (r > 0)
        for (int x : rows_[static_cast<std::size_t>(r - 1)]) --m[r][x - 1];
    }
    visit_(m);
  }

  int n_;
  std::function<void(const std::vector<std::vector<int>>&)> visit_;
  std::vector<std::vector<int>> rows_;
};

void check_asm_size(int n, int limit) {
  require(n >= 1, ErrorKind::InvalidInput, "ASM size must be positive");
  if (n > limit)
    fail(ErrorKind::ResourceLimit, "ASM size " + std::to_string(n) +
                                       " exceeds the limit " +
                                       std::to_string(limit));
}

}  // namespace

BigInt count_asm(int n, int limit) {
  check_asm_size(n, limit);
  std::uint64_t count = 0;
  TriangleWalker(n, [&](const std::vector<std::vector<int>>&) { ++count; }).run();
  return BigInt(std::to_string(count));
}

BigInt count_vsasm(int n, int limit) {
  require(n >= 1, ErrorKind::InvalidInput, "ASM size must be positive");
  if (n % 2 == 0) return BigInt(0);
  check_asm_size(n, limit);
  std::uint64_t count = 0;
  TriangleWalker(n, [&](const std::vector<std::vector<int>>& m) {
    for (const auto& row : m)
      if (!std::equal(row.begin(), row.end(), row.rbegin())) return;
    ++count;
  }).run();
  return BigInt(std::to_string(count));
}

}  // namespace ppsign
