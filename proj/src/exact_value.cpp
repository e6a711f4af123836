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

#include "spinnet/exact_value.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <optional>

namespace spinnet {

namespace {

std::atomic<QConvention> g_convention{QConvention::Plain};

LaurentQ qint_power(long n, long w) {
  LaurentQ base = LaurentQ::quantum_integer(n);
  LaurentQ out(1);
  for (long i = 0; i < w; ++i) out = out * base;
  return out;
}

// [n] vanishes at q = exp(2 pi i / n), so a multiple of it must too. Cheap
// rejection before the exact long division.
bool may_divide_by_qint(const LaurentQ& p, long n) {
  if (n <= 1) return true;
  long double scale = 0;
  for (const auto& [e, c] : p.terms()) scale += std::abs(c.to_complex());
  Complex v = p.evaluate_at_angle(2 * std::numbers::pi_v<long double> / n);
  return std::abs(v) <= 1e-9L * scale;
}

// Brings a summand to normal form; returns nullopt for zero.
std::optional<ExactSummand> normalize(ExactSummand s) {
  if (s.numerator.is_zero()) return std::nullopt;
  if (s.denominator.is_zero()) throw DivisionByZero("zero denominator");
  if (s.denominator.is_constant()) {
    s.numerator = s.numerator.scaled(s.denominator.coefficient(0).inverse());
    s.denominator = LaurentQ(1);
  } else if (auto q = s.numerator.exact_divide(s.denominator)) {
    s.numerator = *q;
    s.denominator = LaurentQ(1);
  } else {
    // monic, lowest exponent 0
    Rational lo = s.denominator.min_exponent();
    RadicalCoefficient lead = s.denominator.terms().rbegin()->second.inverse();
    s.denominator = s.denominator.shifted(-lo).scaled(lead);
    s.numerator = s.numerator.shifted(-lo).scaled(lead);
  }
  RadicalFactor rad;
  for (auto [n, e] : s.radical) {
    if (n <= 1 || e == 0) continue;
    Integer whole = floor_of(e);
    if (whole > 0) {
      s.numerator = s.numerator * qint_power(n, whole.get_si());
      e -= Rational(whole);
    }
    if (e < 0) {
      LaurentQ qn = LaurentQ::quantum_integer(n);
      while (e < 0 && may_divide_by_qint(s.numerator, n)) {
        auto q = s.numerator.exact_divide(qn);
        if (!q) break;
        s.numerator = *q;
        e += 1;
      }
    }
    if (e != 0) rad[n] = e;
  }
  s.radical = std::move(rad);
  return s;
}

std::map<long, Rational> frac_key(const RadicalFactor& r) {
  std::map<long, Rational> key;
  for (const auto& [n, e] : r) {
    Rational f = frac_part(e);
    if (f != 0) key[n] = f;
  }
  return key;
}

ExactSummand merge(const ExactSummand& a, const ExactSummand& b) {
  RadicalFactor common;
  for (const auto& [n, e] : a.radical) common[n] = e;
  for (const auto& [n, e] : b.radical) {
    auto it = common.find(n);
    if (it == common.end()) common[n] = std::min(e, Rational(0));
    else it->second = std::min(it->second, e);
  }
  for (auto& [n, e] : common) {
    if (!b.radical.count(n)) e = std::min(e, Rational(0));
  }
  auto lift = [&](const ExactSummand& s) {
    LaurentQ num = s.numerator;
    for (const auto& [n, e] : common) {
      auto it = s.radical.find(n);
      Rational mine = it == s.radical.end() ? Rational(0) : it->second;
      long w = to_long(mine - e);
      if (w > 0) num = num * qint_power(n, w);
    }
    return num;
  };
  ExactSummand out;
  out.radical = common;
  LaurentQ na = lift(a), nb = lift(b);
  if (a.denominator == b.denominator) {
    out.numerator = na + nb;
    out.denominator = a.denominator;
  } else {
    out.numerator = na * b.denominator + nb * a.denominator;
    out.denominator = a.denominator * b.denominator;
  }
  return out;
}

std::string spin_label(long n) {
  Rational j(n - 1, 2);
  return "Delta[" + to_string(j) + "]";
}

std::string render_radical(long n, const Rational& e) {
  std::string base = spin_label(n);
  Integer den = e.get_den();
  Integer num = e.get_num();
  std::string head;
  if (den == 2) head = "sqrt(" + base + ")";
  else if (den == 4) head = "qroot4(" + base + ")";
  else if (den == 1) head = base;
  else return base + "^(" + to_string(e) + ")";
  if (num == 1) return head;
  return head + "^" + (num < 0 ? "(" + num.get_str() + ")" : num.get_str());
}

}  // namespace

void set_q_convention(QConvention c) { g_convention = c; }
QConvention q_convention() { return g_convention; }

ExactValue::ExactValue(const Rational& r) : ExactValue(LaurentQ(RadicalCoefficient(r))) {}
ExactValue::ExactValue(const RadicalCoefficient& c) : ExactValue(LaurentQ(c)) {}
ExactValue::ExactValue(const LaurentQ& p) { insert(ExactSummand{p, {}, LaurentQ(1)}); }

ExactValue ExactValue::q_power(const Rational& e, const RadicalCoefficient& c) {
  return ExactValue(LaurentQ::monomial(e, c));
}

ExactValue ExactValue::quantum_integer(long n) { return ExactValue(LaurentQ::quantum_integer(n)); }

ExactValue ExactValue::delta(int two_j) {
  if (two_j < 0) throw std::invalid_argument("negative spin");
  return quantum_integer(two_j + 1);
}

ExactValue ExactValue::quantum_integer_power(long n, const Rational& e) {
  if (n <= 0) throw std::invalid_argument("quantum integer power needs n >= 1");
  return from_summand(ExactSummand{LaurentQ(1), {{n, e}}, LaurentQ(1)});
}

ExactValue ExactValue::from_summand(ExactSummand s) {
  ExactValue v;
  v.insert(std::move(s));
  return v;
}

std::vector<ExactSummand> ExactValue::summands() const {
  std::vector<ExactSummand> out;
  out.reserve(parts_.size());
  for (const auto& [k, s] : parts_) out.push_back(s);
  return out;
}

void ExactValue::insert(ExactSummand s) {
  auto n = normalize(std::move(s));
  if (!n) return;
  FracKey key = frac_key(n->radical);
  auto it = parts_.find(key);
  if (it == parts_.end()) {
    parts_.emplace(std::move(key), std::move(*n));
    return;
  }
  auto merged = normalize(merge(it->second, *n));
  if (merged) it->second = std::move(*merged);
  else parts_.erase(it);
}

ExactValue ExactValue::operator-() const {
  ExactValue out = *this;
  for (auto& [k, s] : out.parts_) s.numerator = -s.numerator;
  return out;
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
  for (const auto& [k, s] : o.parts_) insert(s);
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) { return *this += -o; }

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
  ExactValue out;
  for (const auto& [ka, sa] : a.parts_) {
    for (const auto& [kb, sb] : b.parts_) {
      ExactSummand s;
      s.numerator = sa.numerator * sb.numerator;
      s.radical = sa.radical;
      for (const auto& [n, e] : sb.radical) {
        s.radical[n] += e;
      }
      s.denominator = sa.denominator * sb.denominator;
      out.insert(std::move(s));
    }
  }
  return out;
}

ExactValue& ExactValue::operator*=(const ExactValue& o) {
  *this = *this * o;
  return *this;
}

ExactValue ExactValue::inverse() const {
  if (parts_.empty()) throw DivisionByZero("division by zero");
  if (parts_.size() > 1) throw RepresentationLimit("division by a multi-term radical sum");
  const ExactSummand& s = parts_.begin()->second;
  LaurentQ num = s.numerator;
  ExactSummand out;
  for (const auto& [n, e] : s.radical) out.radical[n] = -e;
  long top = floor_of(num.max_exponent() - num.min_exponent()).get_si() + 1;
  for (long n = top; n >= 2; --n) {
    LaurentQ qn = LaurentQ::quantum_integer(n);
    while (may_divide_by_qint(num, n)) {
      auto q = num.exact_divide(qn);
      if (!q) break;
      num = *q;
      out.radical[n] -= 1;
    }
  }
  if (num.is_monomial()) {
    const auto& [e, c] = *num.terms().begin();
    out.numerator = s.denominator * LaurentQ::monomial(-e, c.inverse());
    out.denominator = LaurentQ(1);
  } else {
    RadicalCoefficient lead_inv = num.terms().rbegin()->second.inverse();
    LaurentQ p = num.scaled(lead_inv);
    if (!p.has_rational_coefficients()) {
      throw RepresentationLimit("division by a polynomial with irrational coefficient ratios");
    }
    out.numerator = s.denominator.scaled(lead_inv);
    out.denominator = p;
  }
  return ExactValue::from_summand(std::move(out));
}

ExactValue operator/(const ExactValue& a, const ExactValue& b) { return a * b.inverse(); }

bool operator==(const ExactValue& a, const ExactValue& b) { return (a - b).is_zero(); }

ExactValue ExactValue::conj() const {
  ExactValue out;
  for (const auto& [k, s] : parts_) {
    out.insert(ExactSummand{s.numerator.conj(), s.radical, s.denominator.conj()});
  }
  return out;
}

std::string ExactValue::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [k, s] : parts_) {
    if (!out.empty()) out += " + ";
    bool bare = s.radical.empty() && s.denominator == LaurentQ(1);
    if (bare) {
      out += parts_.size() == 1 ? s.numerator.to_string() : "(" + s.numerator.to_string() + ")";
      continue;
    }
    std::string piece = s.numerator == LaurentQ(1) ? "" : "(" + s.numerator.to_string() + ")";
    for (const auto& [n, e] : s.radical) {
      if (!piece.empty()) piece += "*";
      piece += render_radical(n, e);
    }
    if (piece.empty()) piece = "1";
    if (!(s.denominator == LaurentQ(1))) piece += "/(" + s.denominator.to_string() + ")";
    out += piece;
  }
  return out;
}

ExactValue add(const ExactValue& a, const ExactValue& b) { return a + b; }
ExactValue mul(const ExactValue& a, const ExactValue& b) { return a * b; }
ExactValue divide(const ExactValue& a, const ExactValue& b) { return a / b; }

KappaSeries expand_kappa(const ExactValue& a, int order) {
  KappaSeries total(order);
  for (const ExactSummand& s : a.summands()) {
    KappaSeries term = KappaSeries::from_laurent(s.numerator, order);
    for (const auto& [n, e] : s.radical) {
      KappaSeries base = KappaSeries::from_laurent(LaurentQ::quantum_integer(n), order);
      KappaSeries u = base.scaled(Rational(1, n)) - KappaSeries::constant(order, 1);
      term = term * u.binomial_power(e).scaled(RadicalCoefficient::power(n, e));
    }
    if (!(s.denominator == LaurentQ(1))) {
      KappaSeries den = KappaSeries::from_laurent(s.denominator, order);
      if (den[0].is_zero()) throw DivisionByZero("denominator series has zero constant term");
      term = term * den.inverse();
    }
    total += term;
  }
  return total;
}

RadicalCoefficient classical_coefficient(const ExactValue& a) { return expand_kappa(a, 0)[0]; }

ExactValue substitute_classical(const ExactValue& a) { return ExactValue(classical_coefficient(a)); }

long double q_angle(long double k) {
  if (!(k > 0)) throw std::invalid_argument("level k must be positive");
  long double kk = q_convention() == QConvention::Shifted ? k + 2 : k;
  return 2 * std::numbers::pi_v<long double> / kk;
}

Complex evaluate_numeric(const ExactValue& a, long double k, int /*precision*/) {
  long double theta = q_angle(k);
  Complex sum = 0;
  for (const ExactSummand& s : a.summands()) {
    Complex t = s.numerator.evaluate_at_angle(theta);
    for (const auto& [n, e] : s.radical) {
      long double qn = std::sin(n * theta / 2) / std::sin(theta / 2);
      long double ex = to_long_double(e);
      if (qn > 0) t *= std::pow(qn, ex);
      else t *= std::pow(Complex(qn, 0), Complex(ex, 0));
    }
    if (!(s.denominator == LaurentQ(1))) t /= s.denominator.evaluate_at_angle(theta);
    sum += t;
  }
  return sum;
}

}  // namespace spinnet
