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

#include "spinnet/kappa_series.hpp"

namespace spinnet {

KappaSeries::KappaSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw std::invalid_argument("negative series order");
}

KappaSeries::KappaSeries(int order, std::vector<RadicalCoefficient> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

KappaSeries KappaSeries::constant(int order, const RadicalCoefficient& c) {
  KappaSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

KappaSeries KappaSeries::from_laurent(const LaurentQ& p, int order) {
  KappaSeries s(order);
  for (const auto& [r, c] : p.terms()) {
    // r^m / m!
    Rational w = 1;
    for (int m = 0; m <= order; ++m) {
      if (m > 0) w = w * r / m;
      if (w == 0) break;
      s.coeffs_[m] += c * RadicalCoefficient(w);
    }
  }
  return s;
}

KappaSeries KappaSeries::operator-() const {
  KappaSeries out(order_);
  for (int i = 0; i <= order_; ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

KappaSeries& KappaSeries::operator+=(const KappaSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

KappaSeries& KappaSeries::operator-=(const KappaSeries& o) { return *this += -o; }

KappaSeries operator*(const KappaSeries& a, const KappaSeries& b) {
  int n = std::min(a.order_, b.order_);
  KappaSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

KappaSeries KappaSeries::scaled(const RadicalCoefficient& c) const {
  KappaSeries out(order_);
  for (int i = 0; i <= order_; ++i) out.coeffs_[i] = coeffs_[i] * c;
  return out;
}

KappaSeries KappaSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
  return KappaSeries(order, std::vector<RadicalCoefficient>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

KappaSeries KappaSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw DivisionByZero("series with zero constant term is not invertible");
  RadicalCoefficient c0inv = coeffs_[0].inverse();
  KappaSeries out(order_);
  out.coeffs_[0] = c0inv;
  for (int n = 1; n <= order_; ++n) {
    RadicalCoefficient acc;
    for (int i = 1; i <= n; ++i) acc += coeffs_[i] * out.coeffs_[n - i];
    out.coeffs_[n] = -(acc * c0inv);
  }
  return out;
}

KappaSeries KappaSeries::binomial_power(const Rational& e) const {
  if (!coeffs_[0].is_zero()) throw std::invalid_argument("binomial_power needs zero constant term");
  KappaSeries out = constant(order_, 1);
  KappaSeries upow = constant(order_, 1);
  Rational binom = 1;
  for (int k = 1; k <= order_; ++k) {
    binom = binom * (e - (k - 1)) / k;
    upow = upow * *this;
    if (binom != 0) out += upow.scaled(binom);
  }
  return out;
}

Complex KappaSeries::evaluate(Complex kappa) const {
  Complex sum = 0;
  for (int i = order_; i >= 0; --i) sum = sum * kappa + coeffs_[i].to_complex();
  return sum;
}

std::string KappaSeries::to_string() const {
  std::string out;
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].to_string() + ")";
    if (i == 1) out += "*kappa";
    if (i > 1) out += "*kappa^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(kappa^" + std::to_string(order_ + 1) + ")";
}

KappaSeries log_series(const KappaSeries& s) {
  if (!(s[0] == RadicalCoefficient(1))) throw std::domain_error("log_series needs constant term 1");
  int n = s.order();
  KappaSeries u = s - KappaSeries::constant(n, 1);
  KappaSeries out(n);
  KappaSeries upow = KappaSeries::constant(n, 1);
  for (int k = 1; k <= n; ++k) {
    upow = upow * u;
    Rational w(k % 2 ? 1 : -1, k);
    out += upow.scaled(w);
  }
  return out;
}

KappaSeries exp_series(const KappaSeries& s) {
  if (!s[0].is_zero()) throw std::domain_error("exp_series needs constant term 0");
  int n = s.order();
  KappaSeries out = KappaSeries::constant(n, 1);
  KappaSeries upow = KappaSeries::constant(n, 1);
  Rational fact = 1;
  for (int k = 1; k <= n; ++k) {
    upow = upow * s;
    fact *= k;
    out += upow.scaled(Rational(1 / fact));
  }
  return out;
}

}  // namespace spinnet
