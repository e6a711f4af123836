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

#include "spinnet/radical.hpp"

#include <cmath>
#include <numeric>
#include <set>

namespace spinnet {

namespace {

const Rational kHalf(1, 2);

std::map<long, long> factorize(long n) {
  std::map<long, long> f;
  for (long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

// Multiplies two monomials; the integer parts go into `scale`.
RadicalMonomial mul_monomials(const RadicalMonomial& a, const RadicalMonomial& b, Rational& scale) {
  RadicalMonomial out = a;
  for (const auto& [p, e] : b) {
    Rational sum = out.count(p) ? out[p] + e : e;
    out.erase(p);
    Integer whole = floor_of(sum);
    Rational rest = sum - Rational(whole);
    if (p == -1) {
      if (rest != 0 && rest != kHalf) throw RepresentationLimit("root of unity beyond i");
      if (whole % 2 != 0) scale = -scale;
    } else if (whole != 0) {
      scale *= rational_pow(Rational(p), whole.get_si());
    }
    if (rest != 0) out[p] = rest;
  }
  return out;
}

}  // namespace

RadicalCoefficient::RadicalCoefficient(const Rational& r) {
  if (r != 0) terms_[RadicalMonomial{}] = r;
}

RadicalCoefficient RadicalCoefficient::imaginary_unit() {
  RadicalCoefficient c;
  c.terms_[RadicalMonomial{{-1, kHalf}}] = 1;
  return c;
}

RadicalCoefficient RadicalCoefficient::i_power(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0:
      return RadicalCoefficient(1);
    case 1:
      return imaginary_unit();
    case 2:
      return RadicalCoefficient(-1);
    default:
      return -imaginary_unit();
  }
}

RadicalCoefficient RadicalCoefficient::power(long n, const Rational& e) {
  if (n <= 0) throw std::invalid_argument("radical base must be positive");
  Rational scale = 1;
  RadicalMonomial m;
  for (const auto& [p, k] : factorize(n)) {
    Rational ex = e * k;
    Integer whole = floor_of(ex);
    Rational rest = ex - Rational(whole);
    scale *= rational_pow(Rational(p), whole.get_si());
    if (rest != 0) m[p] = rest;
  }
  RadicalCoefficient c;
  c.terms_[m] = scale;
  return c;
}

bool RadicalCoefficient::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational RadicalCoefficient::rational_value() const {
  if (!is_rational()) throw std::logic_error("coefficient is not rational: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void RadicalCoefficient::add_term(const RadicalMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalCoefficient RadicalCoefficient::operator-() const {
  RadicalCoefficient out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

RadicalCoefficient& RadicalCoefficient::operator+=(const RadicalCoefficient& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RadicalCoefficient& RadicalCoefficient::operator-=(const RadicalCoefficient& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RadicalCoefficient operator*(const RadicalCoefficient& a, const RadicalCoefficient& b) {
  RadicalCoefficient out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_rational()) {
    Rational r = a.rational_value();
    for (const auto& [m, c] : b.terms_) out.terms_.emplace(m, c * r);
    return out;
  }
  if (b.is_rational()) return b * a;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rational scale = ca * cb;
      RadicalMonomial m = mul_monomials(ma, mb, scale);
      out.add_term(m, scale);
    }
  }
  return out;
}

RadicalCoefficient& RadicalCoefficient::operator*=(const RadicalCoefficient& o) {
  *this = *this * o;
  return *this;
}

RadicalCoefficient RadicalCoefficient::conj() const {
  RadicalCoefficient out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, m.count(-1) ? Rational(-c) : c);
  return out;
}

RadicalCoefficient RadicalCoefficient::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero coefficient");
  if (is_rational()) return RadicalCoefficient(1 / rational_value());
  if (terms_.size() == 1) {
    // single monomial: invert each radical separately
    const auto& [m, c] = *terms_.begin();
    RadicalCoefficient out(1 / c);
    for (const auto& [p, e] : m) {
      if (p == -1) {
        out *= -imaginary_unit();
      } else {
        out *= power(p, -e);
      }
    }
    return out;
  }
  // Multiply by Galois conjugates until only a rational remains.
  RadicalCoefficient x = *this;
  RadicalCoefficient acc(1);
  std::set<long> primes;
  for (const auto& [m, c] : x.terms_) {
    for (const auto& [p, e] : m) {
      if (p > 0) primes.insert(p);
    }
  }
  for (long p : primes) {
    long d = 1;
    for (const auto& [m, c] : x.terms_) {
      auto it = m.find(p);
      if (it != m.end()) d = std::lcm(d, it->second.get_den().get_si());
    }
    if (d == 1) continue;
    if (d != 2 && d != 4) throw RepresentationLimit("inverse needs roots of unity beyond i");
    RadicalCoefficient y(1);
    for (long k = 1; k < d; ++k) {
      RadicalCoefficient sigma;
      for (const auto& [m, c] : x.terms_) {
        auto it = m.find(p);
        long a = it == m.end() ? 0 : Rational(it->second * d).get_num().get_si();
        // p^(a/d) -> zeta_d^(k a) p^(a/d), zeta_2 = -1, zeta_4 = i
        RadicalCoefficient t;
        t.terms_[m] = c;
        sigma += t * i_power(k * a * (4 / d));
      }
      y *= sigma;
    }
    acc *= y;
    x *= y;
  }
  if (!x.is_rational()) {
    RadicalCoefficient y = x.conj();
    acc *= y;
    x *= y;
  }
  if (!x.is_rational()) throw std::logic_error("radical norm did not reduce to a rational");
  return acc * RadicalCoefficient(1 / x.rational_value());
}

Complex RadicalCoefficient::to_complex() const {
  Complex sum = 0;
  for (const auto& [m, c] : terms_) {
    Complex t = to_long_double(c);
    for (const auto& [p, e] : m) {
      if (p == -1) {
        t *= Complex(0, 1);
      } else {
        t *= std::pow(static_cast<long double>(p), to_long_double(e));
      }
    }
    sum += t;
  }
  return sum;
}

namespace {

std::string render_radical(long p, const Rational& e) {
  if (p == -1) return "i";
  std::string base = std::to_string(p);
  if (e == kHalf) return "sqrt(" + base + ")";
  if (e == Rational(1, 4)) return "qroot4(" + base + ")";
  if (e == Rational(3, 4)) return "qroot4(" + base + ")^3";
  return base + "^(" + spinnet::to_string(e) + ")";
}

}  // namespace

std::string RadicalCoefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    std::string rad;
    for (const auto& [p, e] : m) {
      if (!rad.empty()) rad += "*";
      rad += render_radical(p, e);
    }
    if (rad.empty()) {
      out += spinnet::to_string(mag);
    } else if (mag == 1) {
      out += rad;
    } else {
      out += spinnet::to_string(mag) + "*" + rad;
    }
  }
  return out;
}

}  // namespace spinnet
