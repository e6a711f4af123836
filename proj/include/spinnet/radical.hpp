// Copyright 2026 The spinnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <map>
#include <string>

#include "spinnet/rational.hpp"

namespace spinnet {

using Complex = std::complex<long double>;

/**
 * Product of prime radicals p^e with every exponent in (0, 1).
 * The base -1 stands for the imaginary unit and only ever carries 1/2.
 */
using RadicalMonomial = std::map<long, Rational>;

/**
 * Element of Q adjoined prime radicals and i, kept as a Q-linear
 * combination of distinct radical monomials.
 */
class RadicalCoefficient {
 public:
  RadicalCoefficient() = default;
  RadicalCoefficient(const Rational& r);  // NOLINT implicit on purpose
  RadicalCoefficient(long n) : RadicalCoefficient(Rational(n)) {}  // NOLINT

  static RadicalCoefficient imaginary_unit();
  /** n^e for a positive integer n; n is factored into primes. */
  static RadicalCoefficient power(long n, const Rational& e);
  /** i^k */
  static RadicalCoefficient i_power(long k);

  const std::map<RadicalMonomial, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  RadicalCoefficient operator-() const;
  RadicalCoefficient& operator+=(const RadicalCoefficient& o);
  RadicalCoefficient& operator-=(const RadicalCoefficient& o);
  RadicalCoefficient& operator*=(const RadicalCoefficient& o);
  friend RadicalCoefficient operator+(RadicalCoefficient a, const RadicalCoefficient& b) {
    return a += b;
  }
  friend RadicalCoefficient operator-(RadicalCoefficient a, const RadicalCoefficient& b) {
    return a -= b;
  }
  friend RadicalCoefficient operator*(const RadicalCoefficient& a, const RadicalCoefficient& b);
  friend bool operator==(const RadicalCoefficient& a, const RadicalCoefficient& b) {
    return a.terms_ == b.terms_;
  }

  /** Complex conjugate (i -> -i); the prime radicals are real. */
  RadicalCoefficient conj() const;
  /** Multiplicative inverse; throws DivisionByZero on zero. */
  RadicalCoefficient inverse() const;

  Complex to_complex() const;
  std::string to_string() const;

 private:
  void add_term(const RadicalMonomial& m, const Rational& c);
  std::map<RadicalMonomial, Rational> terms_;
};

}  // namespace spinnet
