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

#ifndef PPSIGN_POLYNOMIAL_HPP
#define PPSIGN_POLYNOMIAL_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ppsign/number.hpp"

namespace ppsign {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The coefficient vector never has a trailing zero; the zero
/// polynomial has no coefficients and degree -1.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coefficients);
  static ExactPolynomial constant(const Rational& c);
  /// scale * x + shift
  static ExactPolynomial linear(const Rational& scale, const Rational& shift);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  /// p(scale * x + shift)
  ExactPolynomial substitute_linear(const Rational& scale,
                                    const Rational& shift) const;

  friend ExactPolynomial operator+(const ExactPolynomial& a,
                                   const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a,
                                   const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a,
                                   const ExactPolynomial& b);
  friend ExactPolynomial operator*(const Rational& c, const ExactPolynomial& p);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of g / f. Throws Division if f is zero.
std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& g,
                                                   const ExactPolynomial& f);

/// True iff f divides g exactly. f must be nonzero.
bool divides(const ExactPolynomial& f, const ExactPolynomial& g);

/// Unique polynomial of degree < points.size() through all points
/// (Newton divided differences). Duplicate abscissae are rejected.
ExactPolynomial interpolate(
    std::span<const std::pair<Rational, Rational>> points);

/// Interpolates f on x = start, start+step, ... using degree_bound+1 points
/// and confirms the fit on `extra` further points. Throws NeedsMoreSamples
/// if a confirmation point disagrees.
ExactPolynomial fit_polynomial(const std::function<Rational(long)>& f,
                               long start, long step, int degree_bound,
                               int extra = 2);

/// (x + shift)_n = (x+shift)(x+shift+1)...(x+shift+n-1) where x = scale*b.
ExactPolynomial rising_factorial_poly(const Rational& scale,
                                      const Rational& shift, long n);

}  // namespace ppsign

#endif  // PPSIGN_POLYNOMIAL_HPP
