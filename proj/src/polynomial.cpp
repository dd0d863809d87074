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

#include "ppsign/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ppsign/error.hpp"

namespace ppsign {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

ExactPolynomial ExactPolynomial::constant(const Rational& c) {
  return ExactPolynomial(std::vector<Rational>{c});
}

ExactPolynomial ExactPolynomial::linear(const Rational& scale,
                                        const Rational& shift) {
  return ExactPolynomial(std::vector<Rational>{shift, scale});
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational ExactPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational ExactPolynomial::leading() const {
  return is_zero() ? Rational(0) : coeffs_.back();
}

Rational ExactPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

ExactPolynomial ExactPolynomial::substitute_linear(const Rational& scale,
                                                   const Rational& shift) const {
  const ExactPolynomial inner = linear(scale, shift);
  ExactPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + constant(*it);
  return acc;
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  return a + Rational(-1) * b;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const Rational& c, const ExactPolynomial& p) {
  std::vector<Rational> r = p.coeffs_;
  for (auto& v : r) v *= c;
  return ExactPolynomial(std::move(r));
}

std::string ExactPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (k == 0 || mag != 1) os << to_decimal(mag) << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& g,
                                                   const ExactPolynomial& f) {
  require(!f.is_zero(), ErrorKind::Division, "polynomial division by zero");
  std::vector<Rational> rem = g.coefficients();
  const int df = f.degree();
  const Rational lead = f.leading();
  if (g.degree() < df) return {ExactPolynomial{}, g};
  std::vector<Rational> quot(static_cast<std::size_t>(g.degree() - df + 1),
                             Rational(0));
  for (int k = g.degree() - df; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + df)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= df; ++i)
      rem[static_cast<std::size_t>(k + i)] -=
          q * f.coefficients()[static_cast<std::size_t>(i)];
  }
  return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

bool divides(const ExactPolynomial& f, const ExactPolynomial& g) {
  return divmod(g, f).second.is_zero();
}

ExactPolynomial interpolate(
    std::span<const std::pair<Rational, Rational>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(points[i].first != points[j].first, ErrorKind::InvalidInput,
              "duplicate abscissa " + to_decimal(points[i].first));
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) /
              (points[i].first - points[i - level].first);
      if (i == level) break;
    }
  ExactPolynomial acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * ExactPolynomial::linear(Rational(1), -points[k].first) +
          ExactPolynomial::constant(dd[k]);
  }
  return acc;
}

ExactPolynomial rising_factorial_poly(const Rational& scale,
                                      const Rational& shift, long n) {
  ExactPolynomial acc = ExactPolynomial::constant(Rational(1));
  for (long t = 0; t < n; ++t)
    acc = acc * ExactPolynomial::linear(scale, shift + t);
  return acc;
}

ExactPolynomial fit_polynomial(const std::function<Rational(long)>& f,
                               long start, long step, int degree_bound,
                               int extra) {
  require(degree_bound >= 0 && step != 0, ErrorKind::InvalidInput,
          "fit_polynomial needs a nonnegative degree bound and nonzero step");
  std::vector<std::pair<Rational, Rational>> pts;
  long x = start;
  for (int n = 0; n <= degree_bound; ++n, x += step)
    pts.emplace_back(Rational(x), f(x));
  ExactPolynomial p = interpolate(pts);
  for (int n = 0; n < extra; ++n, x += step)
    if (p(Rational(x)) != f(x))
      fail(ErrorKind::NeedsMoreSamples,
           "degree bound " + std::to_string(degree_bound) +
               " too small: fit disagrees at x = " + std::to_string(x));
  return p;
}

}  // namespace ppsign
