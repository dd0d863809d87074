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

#include "ppsign/app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ppsign/error.hpp"
#include "ppsign/formulas.hpp"
#include "ppsign/lgv.hpp"
#include "ppsign/qseries.hpp"

namespace ppsign {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int as_int(long v) { return static_cast<int>(v); }

bool is_cubic(SymmetryClass cls) {
  return cls == SymmetryClass::CSTC || cls == SymmetryClass::TSSC ||
         cls == SymmetryClass::CSSC;
}

bool is_tc_like(SymmetryClass cls) {
  return cls == SymmetryClass::TC || cls == SymmetryClass::STC;
}

SignedCount formula_count(const Instance& inst, BigInt value,
                          std::string convention) {
  return SignedCount{std::move(value), "formula", inst.cls, inst.box(),
                     std::move(convention)};
}

}  // namespace

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag,
                             const char* env_name, std::uint64_t fallback) {
  if (flag) {
    require(*flag > 0, ErrorKind::InvalidInput, "budgets must be positive");
    return *flag;
  }
  if (const char* env = std::getenv(env_name); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(env, &used);
      require(used == std::string(env).size(), ErrorKind::InvalidInput, "");
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput,
           std::string(env_name) + " is not a nonnegative integer: " + env);
    }
    require(v > 0, ErrorKind::InvalidInput,
            std::string(env_name) + " must be positive");
    return v;
  }
  return fallback;
}

BoxDims Instance::box() const {
  if (is_tc_like(cls)) return make_box(as_int(a), as_int(a), as_int(2 * b));
  if (is_cubic(cls)) return make_box(as_int(2 * alpha), as_int(2 * alpha), as_int(2 * alpha));
  return make_box(as_int(a), as_int(b), as_int(c));
}

std::string Instance::params() const {
  std::ostringstream s;
  if (is_tc_like(cls))
    s << "a=" << a << " b=" << b;
  else if (is_cubic(cls))
    s << "alpha=" << alpha;
  else
    s << "a=" << a << " b=" << b << " c=" << c;
  return s.str();
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Lgv: return "lgv";
    case Method::Formula: return "formula";
  }
  return "?";
}

namespace {

std::optional<MethodResult> compute(const Instance& inst, Method m,
                                    const RunConfig& config) {
  MethodResult r;
  r.method = m;
  const SymmetryClass cls = inst.cls;
  switch (m) {
    case Method::Oracle: {
      OracleConfig oc;
      oc.node_budget = config.node_budget;
      if (has_complementation(cls)) {
        r.count = signed_count(inst.box(), cls, oc);
      } else {
        const Rational v = weighted_count(inst.box(), cls, WeightKind{}, oc);
        r.count = SignedCount{v.get_num(), "oracle-count", cls, inst.box(),
                              "unsigned count"};
      }
      return r;
    }
    case Method::Lgv:
      switch (cls) {
        case SymmetryClass::TC: r.count = tcpp_enum(inst.a, inst.b); return r;
        case SymmetryClass::STC: r.count = stcpp_enum(inst.a, inst.b); return r;
        case SymmetryClass::CSTC: r.count = cstcpp_enum(inst.alpha); return r;
        case SymmetryClass::TSSC:
          r.count = tsscpp_enum(inst.alpha);
          r.up_to_sign = true;
          return r;
        case SymmetryClass::SC:
          if (inst.a % 2 || inst.b % 2 || inst.c % 2) return std::nullopt;
          r.count = scpp_enum(inst.a, inst.b, inst.c);
          return r;
        default: return std::nullopt;
      }
    case Method::Formula:
      switch (cls) {
        case SymmetryClass::TC:
          r.count = formula_count(inst, thm1_tcpp(inst.a, inst.b), "area above the mid-plane");
          return r;
        case SymmetryClass::STC:
          if (inst.a % 2 == 1) return std::nullopt;
          r.count = formula_count(inst, thm2_stcpp(inst.a / 2, inst.b),
                                  "upper right quarter");
          return r;
        case SymmetryClass::CSTC:
          r.count = formula_count(inst, thm4_cstcpp(inst.alpha), "upper right eighth");
          return r;
        case SymmetryClass::TSSC:
          r.count = formula_count(inst, thm5_tsscpp(inst.alpha), "absolute value");
          r.up_to_sign = true;
          return r;
        case SymmetryClass::CSSC:
          r.count = formula_count(inst, thm7_csscpp(inst.alpha),
                                  std::string(kThm7SignConvention));
          return r;
        case SymmetryClass::SC:
          if (inst.a % 2 == 0 && inst.b % 2 == 0 && inst.c % 2 == 0) {
            r.count = formula_count(inst, thm6_scpp(inst.a, inst.b, inst.c),
                                    "reference: half-full {k <= c/2}");
            return r;
          }
          if (inst.a % 2 == 0 && inst.b % 2 == 1 && inst.c % 2 == 1) {
            r.count = formula_count(inst, conj_scpp_odd(inst.a, inst.b, inst.c),
                                    "conjectured, up to sign");
            r.count.method = "conjecture";
            r.up_to_sign = true;
            return r;
          }
          return std::nullopt;
        default: return std::nullopt;
      }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MethodResult> run_method(const Instance& inst, Method m,
                                       const RunConfig& config) {
  const auto start = Clock::now();
  std::optional<MethodResult> r;
  try {
    r = compute(inst, m, config);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceLimit) throw;
    r = MethodResult{};
    r->method = m;
    r->skipped = true;
    r->note = e.what();
    r->count = SignedCount{0, std::string(to_string(m)), inst.cls, inst.box(), "skipped"};
  }
  if (!r) return r;
  r->elapsed_ms = config.deterministic ? 0.0 : ms_since(start);
  if (!r->skipped && config.absolute_classes.count(inst.cls)) {
    r->count.value = abs(r->count.value);
    r->count.sign_convention = "absolute value";
    r->up_to_sign = true;
  }
  return r;
}

namespace {

bool same(const MethodResult& x, const MethodResult& y) {
  if (x.skipped || y.skipped) return true;
  if (x.up_to_sign || y.up_to_sign) return abs(x.count.value) == abs(y.count.value);
  return x.count.value == y.count.value;
}

}  // namespace

bool results_agree(const std::vector<MethodResult>& results) {
  for (std::size_t i = 0; i < results.size(); ++i)
    for (std::size_t j = i + 1; j < results.size(); ++j)
      if (!same(results[i], results[j])) return false;
  return true;
}

json to_json(const SignedCount& c, double elapsed_ms) {
  return json{{"class", std::string(to_string(c.cls))},
              {"box", {c.box.a, c.box.b, c.box.c}},
              {"method", c.method},
              {"value", to_decimal(c.value)},
              {"sign_convention", c.sign_convention},
              {"elapsed_ms", elapsed_ms}};
}

json to_json(const PlanePartition& pp) { return json(pp.rows()); }

PlanePartition plane_partition_from_json(const BoxDims& box, const json& rows) {
  require(rows.is_array(), ErrorKind::InvalidInput,
          "a plane partition is an array of rows");
  std::vector<std::vector<int>> r;
  try {
    r = rows.get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed plane partition: ") + e.what());
  }
  return PlanePartition::from_rows(box, r);
}

// ---------------------------------------------------------------------------
// verify

std::vector<Instance> verify_grid(const std::string& which,
                                  const VerifyLimits& limits) {
  const bool all = which == "all";
  VerifyLimits l = limits;
  if (l.smoke) l = VerifyLimits{3, 1, 2, 2, true};
  std::vector<Instance> grid;
  bool known = all;
  const auto want = [&](std::string_view name) {
    const bool hit = all || which == name;
    known = known || hit;
    return hit;
  };
  if (want("tc"))
    for (long a = 1; a <= l.max_a; ++a)
      for (long b = 0; b <= l.max_b; ++b) grid.push_back({SymmetryClass::TC, a, b, 0, 0});
  if (want("stc"))
    for (long a = 1; a <= l.max_a; ++a)
      for (long b = 0; b <= l.max_b; ++b) grid.push_back({SymmetryClass::STC, a, b, 0, 0});
  for (SymmetryClass cls : {SymmetryClass::CSTC, SymmetryClass::TSSC, SymmetryClass::CSSC})
    if (want(to_string(cls)))
      for (long al = 1; al <= l.max_alpha; ++al) grid.push_back({cls, 0, 0, 0, al});
  if (want("sc"))
    for (long a = 0; a <= l.max_side; a += 2)
      for (long b = 0; b <= l.max_side; b += 2)
        for (long c = 0; c <= l.max_side; c += 2)
          grid.push_back({SymmetryClass::SC, a, b, c, 0});
  if (want("sc-odd"))
    for (long a = 0; a <= l.max_side; a += 2)
      for (long b = 1; b <= l.max_side + 1; b += 2)
        for (long c = 1; c <= l.max_side + 1; c += 2)
          grid.push_back({SymmetryClass::SC, a, b, c, 0});
  require(known, ErrorKind::InvalidInput, "unknown verify class '" + which + "'");
  return grid;
}

VerifyRow verify_instance(const Instance& inst, const RunConfig& config) {
  const auto start = Clock::now();
  VerifyRow row;
  row.instance = inst;
  row.oracle = run_method(inst, Method::Oracle, config);
  if (inst.cls == SymmetryClass::CSSC) {
    // The ordinary count is the q = -1 orbit weighting of the cyclic class;
    // the signed count squares to it.
    MethodResult p;
    p.method = Method::Lgv;
    const auto t = Clock::now();
    try {
      OracleConfig oc;
      oc.node_budget = config.node_budget;
      const Rational w = weighted_count(inst.box(), SymmetryClass::Cyclic,
                                        WeightKind{WeightTag::QOrbits, Rational(-1)}, oc);
      p.count = SignedCount{w.get_num(), "cyclic-q=-1", inst.cls, inst.box(),
                            "ordinary enumeration"};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ResourceLimit) throw;
      p.skipped = true;
      p.note = e.what();
    }
    p.elapsed_ms = config.deterministic ? 0.0 : ms_since(t);
    row.pipeline = p;
  } else {
    row.pipeline = run_method(inst, Method::Lgv, config);
  }
  row.formula = run_method(inst, Method::Formula, config);

  for (const auto* r : {&row.oracle, &row.pipeline, &row.formula})
    if (*r && (*r)->skipped) row.any_skipped = true;
  const auto live = [](const std::optional<MethodResult>& r) { return r && !r->skipped; };
  if (inst.cls == SymmetryClass::CSSC) {
    if (live(row.oracle) && live(row.pipeline)) {
      const BigInt s = row.oracle->count.value;
      row.pipeline_matches = s * s == abs(row.pipeline->count.value);
    }
    if (live(row.oracle) && live(row.formula))
      row.oracle_matches = same(*row.oracle, *row.formula);
  } else {
    if (live(row.oracle) && live(row.formula))
      row.oracle_matches = same(*row.oracle, *row.formula);
    if (live(row.pipeline) && live(row.formula))
      row.pipeline_matches = same(*row.pipeline, *row.formula);
    else if (live(row.pipeline) && live(row.oracle))
      row.pipeline_matches = same(*row.pipeline, *row.oracle);
  }
  row.elapsed_ms = config.deterministic ? 0.0 : ms_since(start);
  return row;
}

// ---------------------------------------------------------------------------
// identities

namespace {

using Params = std::map<std::string, std::string>;

long get_long(const Params& p, const std::string& key, long fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "--" + key + " expects an integer, got '" + it->second + "'");
  }
}

Rational parse_rational(const std::string& text, const std::string& key) {
  try {
    Rational r(text, 10);
    require(r.get_den() != 0, ErrorKind::InvalidInput, "zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::InvalidInput, "--" + key + " expects a rational, got '" + text + "'");
  }
}

Rational get_rational(const Params& p, const std::string& key, const Rational& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : parse_rational(it->second, key);
}

std::string str(const Rational& r) { return to_decimal(r); }
std::string str(long v) { return std::to_string(v); }

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Rational rational(long span, long max_den) {
    return make_rational(integer(-span, span), integer(1, max_den));
  }

 private:
  std::mt19937_64 gen_;
};

IdentityOutcome outcome(const std::string& name, Params params, const Rational& lhs,
                        const Rational& rhs) {
  return {name, std::move(params), str(lhs), str(rhs), lhs == rhs};
}

IdentityOutcome flag_outcome(const std::string& name, Params params, bool pass) {
  return {name, std::move(params), pass ? "true" : "false", "true", pass};
}

IdentityOutcome detl_instance(const std::vector<Rational>& x, const std::vector<Rational>& a,
                              const std::vector<Rational>& b) {
  Params p{{"n", str(static_cast<long>(x.size()))}};
  const auto join = [](const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + str(v[i]);
    return s;
  };
  p["X"] = join(x);
  p["A"] = join(a);
  p["B"] = join(b);
  const IdentitySides s = lemma_detl(x, a, b);
  return outcome("detl", p, s.lhs, s.rhs);
}

IdentityOutcome lemma2ji_instance(long alpha, long beta, int gamma) {
  Params p{{"alpha", str(alpha)}, {"beta", str(beta)}, {"gamma", str(gamma)}};
  try {
    const Lemma2jiResult r = lemma_2ji(alpha, beta, gamma);
    return outcome("2ji", p, Rational(r.determinant), Rational(r.product));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalConsistency) throw;
    return {"2ji", p, e.what(), "", false};
  }
}

IdentityOutcome m1_instance(long alpha, long b) {
  Params p{{"alpha", str(alpha)}, {"b", str(b)}};
  try {
    const BigInt v = lemma_M1(alpha, b);
    return outcome("m1", p, Rational(v), Rational(v));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalConsistency) throw;
    return {"m1", p, e.what(), "", false};
  }
}

IdentityOutcome mrr_instance(const Rational& mu, long n) {
  const IdentitySides s = mrr_sides(mu, n);
  return outcome("mrr", {{"mu", str(mu)}, {"n", str(n)}}, s.lhs, s.rhs);
}

std::optional<IdentityOutcome> saalschutz_instance(const Rational& a, const Rational& b,
                                                   const Rational& c, long n) {
  Params p{{"a", str(a)}, {"b", str(b)}, {"c", str(c)}, {"n", str(n)}};
  try {
    const Rational rhs = pfaff_saalschutz_rhs(a, b, c, n);
    HyperParams h{{a, b, Rational(-n)}, {c, 1 + a + b - c - n}, Rational(1)};
    return outcome("pfaff-saalschutz", p, hyper_terminating(h), rhs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Division || e.kind() == ErrorKind::SingularParameter)
      return std::nullopt;
    throw;
  }
}

IdentityOutcome minor_summation_instance(Draw& draw, long p, long n,
                                         const RunConfig& config) {
  ExactMatrix t(static_cast<std::size_t>(p), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = draw.integer(-3, 3);
  ExactMatrix a(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      a(i, j) = draw.integer(-3, 3);
      a(j, i) = -a(i, j);
    }
  const MinorSummation m = minor_summation(t, SkewMatrix(a), config.subset_budget);
  return outcome("minor-summation", {{"p", str(p)}, {"n", str(n)}}, m.direct, m.pfaffian);
}

IdentityOutcome s4_instance(long alpha, long b, long i, long j) {
  return flag_outcome("recurrence-s4",
                      {{"alpha", str(alpha)}, {"b", str(b)}, {"i", str(i)}, {"j", str(j)}},
                      check_s4_recurrence(alpha, b, i, j));
}

IdentityOutcome step2_instance(long alpha, long t, long j) {
  return flag_outcome("step2-divisibility",
                      {{"alpha", str(alpha)}, {"t", str(t)}, {"j", str(j)}},
                      check_step2_divisibility(alpha, t, j));
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{
      "detl", "2ji", "m1", "mrr", "pfaff-saalschutz", "minor-summation",
      "recurrence-s4", "step2-divisibility"};
  return names;
}

std::vector<IdentityOutcome> run_identity(const std::string& name, const Params& params,
                                          int fuzz, std::uint64_t seed,
                                          const RunConfig& config) {
  require(std::find(identity_names().begin(), identity_names().end(), name) !=
              identity_names().end(),
          ErrorKind::InvalidInput, "unknown identity '" + name + "'");
  require(fuzz >= 0, ErrorKind::InvalidInput, "--fuzz must be nonnegative");
  Draw draw(seed);
  std::vector<IdentityOutcome> out;
  const int count = fuzz > 0 ? fuzz : 1;
  const bool random = fuzz > 0;

  for (int k = 0; k < count; ++k) {
    if (name == "detl") {
      const long n = random ? draw.integer(1, 5) : get_long(params, "n", 3);
      require(n >= 1, ErrorKind::InvalidInput, "--n must be positive");
      std::vector<Rational> x, a, b;
      for (long i = 1; i <= n; ++i) x.push_back(random ? draw.rational(9, 5) : Rational(i * i));
      for (long i = 2; i <= n; ++i) {
        a.push_back(random ? draw.rational(9, 5) : Rational(i));
        b.push_back(random ? draw.rational(9, 5) : Rational(1 - 2 * i));
      }
      out.push_back(detl_instance(x, a, b));
    } else if (name == "2ji") {
      if (random)
        out.push_back(lemma2ji_instance(draw.integer(1, 6), draw.integer(0, 6),
                                        static_cast<int>(draw.integer(0, 1))));
      else
        out.push_back(lemma2ji_instance(get_long(params, "alpha", 2), get_long(params, "beta", 2),
                                        static_cast<int>(get_long(params, "gamma", 0))));
    } else if (name == "m1") {
      if (random)
        out.push_back(m1_instance(2 * draw.integer(1, 3), draw.integer(0, 6)));
      else
        out.push_back(m1_instance(get_long(params, "alpha", 2), get_long(params, "b", 2)));
    } else if (name == "mrr") {
      if (random)
        out.push_back(mrr_instance(draw.rational(9, 4), draw.integer(1, 6)));
      else
        out.push_back(mrr_instance(get_rational(params, "mu", Rational(1)),
                                   get_long(params, "n", 3)));
    } else if (name == "pfaff-saalschutz") {
      if (random) {
        std::optional<IdentityOutcome> o;
        while (!o)
          o = saalschutz_instance(draw.rational(12, 6), draw.rational(12, 6),
                                  draw.rational(12, 6), draw.integer(0, 8));
        out.push_back(*o);
      } else {
        auto o = saalschutz_instance(get_rational(params, "a", make_rational(1, 2)),
                                     get_rational(params, "b", make_rational(1, 3)),
                                     get_rational(params, "c", make_rational(5, 4)),
                                     get_long(params, "n", 4));
        require(o.has_value(), ErrorKind::InvalidInput,
                "the series meets a vanishing denominator for these parameters");
        out.push_back(*o);
      }
    } else if (name == "minor-summation") {
      const long p = random ? draw.integer(2, 8) : get_long(params, "p", 6);
      const long n = random ? 2 * draw.integer(1, p / 2) : get_long(params, "n", 4);
      out.push_back(minor_summation_instance(draw, p, n, config));
    } else if (name == "recurrence-s4") {
      if (random) {
        const long alpha = draw.integer(1, 6);
        const long b = 2 * draw.integer(0, 5) + (alpha % 2);
        out.push_back(s4_instance(alpha, b, draw.integer(1, 4), draw.integer(1, 4)));
      } else {
        out.push_back(s4_instance(get_long(params, "alpha", 2), get_long(params, "b", 2),
                                  get_long(params, "i", 1), get_long(params, "j", 1)));
      }
    } else {
      if (random) {
        const long alpha = 2 * draw.integer(1, 3);
        out.push_back(step2_instance(alpha, draw.integer(1, 3), draw.integer(1, alpha / 2)));
      } else {
        out.push_back(step2_instance(get_long(params, "alpha", 4), get_long(params, "t", 1),
                                     get_long(params, "j", 1)));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// command line

namespace {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

std::string format_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

std::string box_text(const BoxDims& b) { return to_string(b); }

void emit_tsv_header(std::ostream& out) {
  out << "class\tbox\tmethod\tvalue\tsign_convention\telapsed_ms\n";
}

void emit_count(std::ostream& out, OutputFormat f, const MethodResult& r) {
  const SignedCount& c = r.count;
  const std::string value = r.skipped ? "SKIPPED" : to_decimal(c.value);
  if (f == OutputFormat::Tsv) {
    out << to_string(c.cls) << '\t' << box_text(c.box) << '\t' << c.method << '\t' << value
        << '\t' << c.sign_convention << '\t' << format_ms(r.elapsed_ms) << '\n';
  } else {
    out << to_string(c.cls) << ' ' << box_text(c.box) << "  " << c.method << " = " << value;
    if (!r.skipped) out << "  [" << c.sign_convention << (r.up_to_sign ? ", up to sign" : "") << "]";
    out << "  " << format_ms(r.elapsed_ms) << " ms";
    if (r.skipped) out << "  (" << r.note << ")";
    out << '\n';
  }
}

json count_json(const MethodResult& r) {
  json j = to_json(r.count, r.elapsed_ms);
  if (r.skipped) {
    j["value"] = nullptr;
    j["skipped"] = r.note;
  }
  if (r.up_to_sign) j["up_to_sign"] = true;
  return j;
}

std::string cell(const std::optional<MethodResult>& r) {
  if (!r) return "n/a";
  if (r->skipped) return "SKIPPED";
  return to_decimal(r->count.value);
}

json cell_json(const std::optional<MethodResult>& r) {
  if (!r) return nullptr;
  if (r->skipped) return "SKIPPED";
  return to_decimal(r->count.value);
}

struct Options {
  std::string format = "human";
  std::string out_path;
  std::optional<std::uint64_t> node_budget, subset_budget;
  std::vector<std::string> absolute;
  std::uint64_t seed = 1;
  bool strict = false;
  bool deterministic = false;

  // enumerate
  std::string cls;
  long a = -1, b = -1, c = -1, alpha = -1;
  std::string method = "all";
  bool list = false;

  // verify
  std::string verify_class = "all";
  VerifyLimits limits;

  // identity
  std::string identity;
  std::map<std::string, std::string> params;
  int fuzz = 0;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  cfg.node_budget = resolve_budget(o.node_budget, kNodeBudgetEnv, kDefaultNodeBudget);
  cfg.subset_budget = resolve_budget(o.subset_budget, kSubsetBudgetEnv, kDefaultSubsetBudget);
  if (o.format == "json")
    cfg.format = OutputFormat::Json;
  else if (o.format == "tsv")
    cfg.format = OutputFormat::Tsv;
  else
    cfg.format = OutputFormat::Human;
  for (const auto& name : o.absolute) {
    const auto cls = parse_class(name);
    require(cls.has_value(), ErrorKind::InvalidInput, "unknown class '" + name + "'");
    cfg.absolute_classes.insert(*cls);
  }
  cfg.seed = o.seed;
  cfg.strict = o.strict;
  cfg.deterministic = o.deterministic;
  return cfg;
}

Instance make_instance(const Options& o) {
  const auto cls = parse_class(o.cls);
  require(cls.has_value(), ErrorKind::InvalidInput, "unknown class '" + o.cls + "'");
  Instance inst;
  inst.cls = *cls;
  const auto need = [](long v, const char* name) {
    require(v >= 0, ErrorKind::InvalidInput,
            std::string("--") + name + " is required and must be nonnegative");
    return v;
  };
  if (is_tc_like(inst.cls)) {
    inst.a = need(o.a, "a");
    inst.b = need(o.b, "b");
  } else if (is_cubic(inst.cls)) {
    inst.alpha = need(o.alpha, "alpha");
    require(inst.alpha >= 1, ErrorKind::InvalidInput, "--alpha must be positive");
  } else {
    inst.a = need(o.a, "a");
    inst.b = need(o.b, "b");
    inst.c = need(o.c, "c");
  }
  return inst;
}

int cmd_enumerate(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const Instance inst = make_instance(o);
  check_shape(inst.box(), inst.cls);

  if (o.list) {
    OracleConfig oc;
    oc.node_budget = cfg.node_budget;
    json arr = json::array();
    for (const auto& pp : collect_class(inst.box(), inst.cls, oc)) arr.push_back(to_json(pp));
    out << arr.dump() << '\n';
    return kOk;
  }

  std::vector<Method> methods;
  if (o.method == "all")
    methods = {Method::Oracle, Method::Lgv, Method::Formula};
  else if (o.method == "oracle")
    methods = {Method::Oracle};
  else if (o.method == "lgv")
    methods = {Method::Lgv};
  else
    methods = {Method::Formula};

  std::vector<MethodResult> results;
  for (Method m : methods) {
    auto r = run_method(inst, m, cfg);
    if (!r) {
      require(o.method == "all", ErrorKind::UnsupportedCase,
              std::string("no ") + std::string(to_string(m)) + " evaluation for " +
                  std::string(to_string(inst.cls)) + " " + inst.params());
      continue;
    }
    results.push_back(std::move(*r));
  }
  const bool agree = results_agree(results);
  bool skipped = false;
  for (const auto& r : results) skipped = skipped || r.skipped;

  if (cfg.format == OutputFormat::Json) {
    json j{{"results", json::array()}};
    for (const auto& r : results) j["results"].push_back(count_json(r));
    if (o.method == "all") j["verdict"] = agree ? "OK" : "MISMATCH";
    out << j.dump(2) << '\n';
  } else {
    if (cfg.format == OutputFormat::Tsv) emit_tsv_header(out);
    for (const auto& r : results) emit_count(out, cfg.format, r);
    if (o.method == "all" && cfg.format == OutputFormat::Human)
      out << "verdict: " << (agree ? "OK" : "MISMATCH") << '\n';
  }
  if (!agree) return kMismatch;
  if (skipped && cfg.strict) return kBudget;
  return kOk;
}

int cmd_verify(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const auto grid = verify_grid(o.verify_class, o.limits);
  std::vector<VerifyRow> rows;
  rows.reserve(grid.size());
  for (const auto& inst : grid) rows.push_back(verify_instance(inst, cfg));

  bool all_ok = true, skipped = false;
  for (const auto& r : rows) {
    all_ok = all_ok && r.ok();
    skipped = skipped || r.any_skipped;
  }

  if (cfg.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      const BoxDims bx = r.instance.box();
      arr.push_back({{"class", std::string(to_string(r.instance.cls))},
                     {"params", r.instance.params()},
                     {"box", {bx.a, bx.b, bx.c}},
                     {"oracle", cell_json(r.oracle)},
                     {"pipeline", cell_json(r.pipeline)},
                     {"formula", cell_json(r.formula)},
                     {"oracle_matches", r.oracle_matches},
                     {"pipeline_matches", r.pipeline_matches},
                     {"status", r.ok() ? (r.any_skipped ? "SKIPPED" : "OK") : "MISMATCH"},
                     {"elapsed_ms", r.elapsed_ms}});
    }
    out << json{{"rows", arr}, {"verdict", all_ok ? "OK" : "MISMATCH"}}.dump(2) << '\n';
  } else {
    const char sep = cfg.format == OutputFormat::Tsv ? '\t' : ' ';
    if (cfg.format == OutputFormat::Tsv)
      out << "class\tparams\tbox\toracle\tpipeline\tformula\toracle_matches\t"
             "pipeline_matches\tstatus\telapsed_ms\n";
    for (const auto& r : rows) {
      const std::string status = r.ok() ? (r.any_skipped ? "SKIPPED" : "OK") : "MISMATCH";
      if (cfg.format == OutputFormat::Tsv) {
        out << to_string(r.instance.cls) << sep << r.instance.params() << sep
            << box_text(r.instance.box()) << sep << cell(r.oracle) << sep << cell(r.pipeline)
            << sep << cell(r.formula) << sep << r.oracle_matches << sep << r.pipeline_matches
            << sep << status << sep << format_ms(r.elapsed_ms) << '\n';
      } else {
        out << std::left << std::setw(6) << to_string(r.instance.cls) << std::setw(18)
            << r.instance.params() << " oracle=" << std::setw(10) << cell(r.oracle)
            << " pipeline=" << std::setw(10) << cell(r.pipeline) << " formula="
            << std::setw(10) << cell(r.formula) << ' ' << std::setw(9) << status
            << format_ms(r.elapsed_ms) << " ms\n";
      }
    }
    if (cfg.format == OutputFormat::Human)
      out << rows.size() << " rows, verdict: " << (all_ok ? "OK" : "MISMATCH") << '\n';
  }
  if (!all_ok) return kMismatch;
  if (skipped && cfg.strict) return kBudget;
  return kOk;
}

int cmd_identity(const Options& o, const RunConfig& cfg, std::ostream& out) {
  const auto results = run_identity(o.identity, o.params, o.fuzz, cfg.seed, cfg);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  const auto params_text = [](const IdentityOutcome& r) {
    std::string s;
    for (const auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
  };
  if (cfg.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"identity", r.name}, {"params", r.params}, {"lhs", r.lhs},
                     {"rhs", r.rhs}, {"result", r.pass ? "PASS" : "FAIL"}});
    out << json{{"instances", arr}, {"verdict", all ? "PASS" : "FAIL"}}.dump(2) << '\n';
  } else if (cfg.format == OutputFormat::Tsv) {
    out << "identity\tparams\tlhs\trhs\tresult\n";
    for (const auto& r : results)
      out << r.name << '\t' << params_text(r) << '\t' << r.lhs << '\t' << r.rhs << '\t'
          << (r.pass ? "PASS" : "FAIL") << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      passed += r.pass;
      out << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << params_text(r);
      if (!r.pass) out << "  lhs=" << r.lhs << " rhs=" << r.rhs;
      out << '\n';
    }
    out << passed << "/" << results.size() << " PASS\n";
  }
  return all ? kOk : kMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Signed enumeration of plane partitions in complementation symmetry classes",
               "ppsign"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "human"}));
    sub->add_option("--out", o.out_path, "Write data to FILE instead of stdout");
    sub->add_option("--node-budget", o.node_budget,
                    std::string("Oracle search nodes (env ") + kNodeBudgetEnv + ")");
    sub->add_option("--subset-budget", o.subset_budget,
                    std::string("Minor-summation subsets (env ") + kSubsetBudgetEnv + ")");
    sub->add_option("--absolute", o.absolute, "Report |value| for this class (repeatable)");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_flag("--strict", o.strict, "Exit 3 when a budget is exceeded");
    sub->add_flag("--deterministic", o.deterministic, "Report elapsed_ms as 0");
  };

  auto* en = app.add_subcommand("enumerate", "Signed count of one class and box");
  add_common(en);
  en->add_option("--class", o.cls, "Symmetry class (tc, stc, cstc, tssc, sc, cssc, ...)")
      ->required();
  en->add_option("--a", o.a, "Side a (box a x a x 2b for tc/stc)");
  en->add_option("--b", o.b, "Side b (half height for tc/stc)");
  en->add_option("--c", o.c, "Side c");
  en->add_option("--alpha", o.alpha, "Half side for cstc, tssc, cssc");
  en->add_option("--method", o.method, "Evaluation method")
      ->check(CLI::IsMember({"oracle", "lgv", "formula", "all"}));
  en->add_flag("--list", o.list, "Print the class members as JSON height matrices");

  auto* ve = app.add_subcommand("verify", "Cross-check methods over a parameter grid");
  add_common(ve);
  ve->add_option("--class", o.verify_class, "tc, stc, cstc, tssc, cssc, sc, sc-odd or all");
  ve->add_option("--max-a", o.limits.max_a, "Largest a for tc/stc");
  ve->add_option("--max-b", o.limits.max_b, "Largest b for tc/stc");
  ve->add_option("--max-alpha", o.limits.max_alpha, "Largest alpha for cubic classes");
  ve->add_option("--max-side", o.limits.max_side, "Largest even side for sc");
  ve->add_flag("--smoke", o.limits.smoke, "Minimal grid");

  auto* id = app.add_subcommand("identity", "Check a determinant or series identity");
  add_common(id);
  id->add_option("--name", o.identity, "Identity name")
      ->required()
      ->check(CLI::IsMember(identity_names()));
  for (const char* key : {"n", "mu", "alpha", "beta", "gamma", "a", "b", "c", "i", "j", "t", "p"}) {
    const std::string k = key;
    id->add_option_function<std::string>(
        "--" + k, [&o, k](const std::string& v) { o.params[k] = v; }, "Parameter " + k);
  }
  id->add_option("--fuzz", o.fuzz, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    const RunConfig cfg = make_config(o);
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      require(file.good(), ErrorKind::InvalidInput, "cannot open " + o.out_path);
      sink = &file;
    }
    if (en->parsed()) return cmd_enumerate(o, cfg, *sink);
    if (ve->parsed()) return cmd_verify(o, cfg, *sink);
    return cmd_identity(o, cfg, *sink);
  } catch (const Error& e) {
    err << "ppsign: " << to_string(e.kind()) << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ResourceLimit: return o.strict ? kBudget : kOk;
      case ErrorKind::InternalConsistency:
      case ErrorKind::NeedsMoreSamples: return kMismatch;
      default: return kUsage;
    }
  }
}

}  // namespace ppsign
