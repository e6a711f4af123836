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

#include "spinnet/laurent.hpp"

#include <cmath>

namespace spinnet {

LaurentQ::LaurentQ(const RadicalCoefficient& c) {
  if (!c.is_zero()) terms_.emplace(Rational(0), c);
}

LaurentQ LaurentQ::monomial(const Rational& exponent, const RadicalCoefficient& c) {
  LaurentQ out;
  if (!c.is_zero()) out.terms_.emplace(exponent, c);
  return out;
}

LaurentQ LaurentQ::quantum_integer(long n) {
  if (n < 0) throw std::invalid_argument("quantum integer of negative n");
  LaurentQ out;
  for (long m = 0; m < n; ++m) out.terms_.emplace(Rational(n - 1 - 2 * m, 2), RadicalCoefficient(1));
  return out;
}

bool LaurentQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentQ::has_rational_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

RadicalCoefficient LaurentQ::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? RadicalCoefficient() : it->second;
}

void LaurentQ::add_term(const Rational& e, const RadicalCoefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentQ LaurentQ::scaled(const RadicalCoefficient& c) const {
  LaurentQ out;
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

LaurentQ LaurentQ::shifted(const Rational& exponent) const {
  LaurentQ out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exponent, c);
  return out;
}

LaurentQ LaurentQ::conj() const {
  LaurentQ out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c.conj());
  return out;
}

std::optional<LaurentQ> LaurentQ::exact_divide(const LaurentQ& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return LaurentQ();
  const Rational d_top = d.max_exponent();
  const Rational d_span = d.max_exponent() - d.min_exponent();
  const RadicalCoefficient lead_inv = d.terms_.rbegin()->second.inverse();
  LaurentQ rem = *this;
  LaurentQ quot;
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < d_span) return std::nullopt;
    Rational e = rem.max_exponent() - d_top;
    RadicalCoefficient c = rem.terms_.rbegin()->second * lead_inv;
    LaurentQ t = monomial(e, c);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

Complex LaurentQ::evaluate_at_angle(long double angle) const {
  Complex sum = 0;
  for (const auto& [e, c] : terms_) {
    long double phase = angle * to_long_double(e);
    sum += c.to_complex() * Complex(std::cos(phase), std::sin(phase));
  }
  return sum;
}

namespace {

std::string q_power(const Rational& e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  if (is_integer(e) && e > 0) return "q^" + to_string(e);
  return "q^(" + to_string(e) + ")";
}

}  // namespace

std::string LaurentQ::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string qp = q_power(e);
    bool negative = c.is_rational() && c.rational_value() < 0;
    RadicalCoefficient mag = negative ? -c : c;
    std::string cs;
    if (mag.is_rational()) {
      cs = mag.rational_value() == 1 && !qp.empty() ? "" : spinnet::to_string(mag.rational_value());
    } else {
      cs = mag.terms().size() == 1 ? mag.to_string() : "(" + mag.to_string() + ")";
      if (mag.terms().size() == 1 && mag.terms().begin()->second < 0) cs = "(" + cs + ")";
    }
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    if (cs.empty()) out += qp;
    else if (qp.empty()) out += cs;
    else out += cs + "*" + qp;
  }
  return out;
}

}  // namespace spinnet
