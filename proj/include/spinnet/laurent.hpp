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

#include <map>
#include <optional>
#include <string>

#include "spinnet/radical.hpp"

namespace spinnet {

/** Finite sum of c * q^r with rational r. */
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(const RadicalCoefficient& c);  // NOLINT constant polynomial
  LaurentQ(long n) : LaurentQ(RadicalCoefficient(n)) {}  // NOLINT

  static LaurentQ monomial(const Rational& exponent, const RadicalCoefficient& c = 1);
  /** [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}), expanded. */
  static LaurentQ quantum_integer(long n);

  const std::map<Rational, RadicalCoefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_rational_coefficients() const;
  const Rational& min_exponent() const { return terms_.begin()->first; }
  const Rational& max_exponent() const { return terms_.rbegin()->first; }
  RadicalCoefficient coefficient(const Rational& exponent) const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }

  LaurentQ scaled(const RadicalCoefficient& c) const;
  LaurentQ shifted(const Rational& exponent) const;
  /** q -> 1/q together with i -> -i. */
  LaurentQ conj() const;

  /** Quotient if d divides *this exactly, nullopt otherwise. */
  std::optional<LaurentQ> exact_divide(const LaurentQ& d) const;

  /** Value at q = exp(i * angle), q^r taken as exp(i * angle * r). */
  Complex evaluate_at_angle(long double angle) const;

  std::string to_string() const;

 private:
  void add_term(const Rational& e, const RadicalCoefficient& c);
  std::map<Rational, RadicalCoefficient> terms_;
};

}  // namespace spinnet
