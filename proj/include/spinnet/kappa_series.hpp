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

#include <string>
#include <vector>

#include "spinnet/laurent.hpp"

namespace spinnet {

/** Power series in kappa truncated after kappa^order. */
class KappaSeries {
 public:
  explicit KappaSeries(int order = 0);
  KappaSeries(int order, std::vector<RadicalCoefficient> coeffs);

  static KappaSeries constant(int order, const RadicalCoefficient& c);
  /** Series of sum_r c_r exp(r kappa). */
  static KappaSeries from_laurent(const LaurentQ& p, int order);

  int order() const { return order_; }
  const RadicalCoefficient& operator[](int i) const { return coeffs_.at(i); }
  const std::vector<RadicalCoefficient>& coefficients() const { return coeffs_; }

  KappaSeries operator-() const;
  KappaSeries& operator+=(const KappaSeries& o);
  KappaSeries& operator-=(const KappaSeries& o);
  friend KappaSeries operator+(KappaSeries a, const KappaSeries& b) { return a += b; }
  friend KappaSeries operator-(KappaSeries a, const KappaSeries& b) { return a -= b; }
  friend KappaSeries operator*(const KappaSeries& a, const KappaSeries& b);
  friend bool operator==(const KappaSeries& a, const KappaSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  KappaSeries scaled(const RadicalCoefficient& c) const;
  KappaSeries truncated(int order) const;
  /** Requires an invertible constant term. */
  KappaSeries inverse() const;
  /** (1 + u)^e with u = *this; requires a zero constant term. */
  KappaSeries binomial_power(const Rational& e) const;

  Complex evaluate(Complex kappa) const;
  std::string to_string() const;

 private:
  int order_;
  std::vector<RadicalCoefficient> coeffs_;
};

/** Formal logarithm; the constant term must be exactly 1. */
KappaSeries log_series(const KappaSeries& s);
/** Formal exponential; the constant term must be exactly 0. */
KappaSeries exp_series(const KappaSeries& s);

}  // namespace spinnet
