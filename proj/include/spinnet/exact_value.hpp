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
#include <string>
#include <vector>

#include "spinnet/kappa_series.hpp"
#include "spinnet/laurent.hpp"

namespace spinnet {

/**
 * Powers of quantum integers, keyed by n (the base is [n] = Delta_{(n-1)/2}).
 * Exponents are arbitrary rationals; a negative integer part acts as a
 * denominator.
 */
using RadicalFactor = std::map<long, Rational>;

/** One summand: numerator * prod [n]^e / denominator. */
struct ExactSummand {
  LaurentQ numerator;
  RadicalFactor radical;
  LaurentQ denominator{1};  // rational coefficients only
};

enum class QConvention { Plain, Shifted };

/** q = exp(2 pi i / k) for Plain, exp(2 pi i / (k + 2)) for Shifted. */
void set_q_convention(QConvention c);
QConvention q_convention();

/**
 * Exact invariant value. Summands are grouped by the fractional parts of
 * their radical exponents; two values are equal iff their difference has no
 * summands.
 */
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(const Rational& r);                 // NOLINT
  ExactValue(long n) : ExactValue(Rational(n)) {}  // NOLINT
  ExactValue(const RadicalCoefficient& c);       // NOLINT
  ExactValue(const LaurentQ& p);                 // NOLINT

  static ExactValue q_power(const Rational& e, const RadicalCoefficient& c = 1);
  static ExactValue quantum_integer(long n);
  /** Delta_j for spin two_j / 2. */
  static ExactValue delta(int two_j);
  /** [n]^e */
  static ExactValue quantum_integer_power(long n, const Rational& e);
  static ExactValue from_summand(ExactSummand s);

  bool is_zero() const { return parts_.empty(); }
  std::vector<ExactSummand> summands() const;
  std::size_t summand_count() const { return parts_.size(); }

  ExactValue operator-() const;
  ExactValue& operator+=(const ExactValue& o);
  ExactValue& operator-=(const ExactValue& o);
  ExactValue& operator*=(const ExactValue& o);
  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator/(const ExactValue& a, const ExactValue& b);
  friend bool operator==(const ExactValue& a, const ExactValue& b);
  friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

  ExactValue inverse() const;
  /** q -> 1/q and i -> -i. */
  ExactValue conj() const;

  std::string to_string() const;

 private:
  using FracKey = std::map<long, Rational>;
  void insert(ExactSummand s);
  std::map<FracKey, ExactSummand> parts_;
};

ExactValue add(const ExactValue& a, const ExactValue& b);
ExactValue mul(const ExactValue& a, const ExactValue& b);
ExactValue divide(const ExactValue& a, const ExactValue& b);

KappaSeries expand_kappa(const ExactValue& a, int order);
/** q -> 1 value, taken as the constant term of the kappa expansion. */
ExactValue substitute_classical(const ExactValue& a);
RadicalCoefficient classical_coefficient(const ExactValue& a);

/** Numeric value at the configured q for level k. `precision` only affects printing. */
Complex evaluate_numeric(const ExactValue& a, long double k, int precision = 12);
/** Angle theta with q = exp(i theta) for level k under the active convention. */
long double q_angle(long double k);

}  // namespace spinnet
