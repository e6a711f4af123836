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

#include "spinnet/recoupling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace spinnet {

namespace {

std::atomic<bool> g_literal_phase{false};

std::shared_mutex g_tet_mutex;
std::map<TetKey, ExactValue> g_tet_cache;

void require(bool ok, const std::string& what) {
  if (!ok) throw InadmissibleSpins(what);
}

std::string triple_text(int a, int b, int c) {
  return "(" + Spin(a).to_string() + ", " + Spin(b).to_string() + ", " + Spin(c).to_string() + ")";
}

void require_triple(int a, int b, int c) {
  require(admissible(a, b, c), "inadmissible spin triple " + triple_text(a, b, c));
}

// [k]! in the Temperley-Lieb scheme: sign times a product of q-integers.
struct Factorial {
  int sign = 1;
  RadicalFactor rad;
};

void accumulate(RadicalFactor& into, int k, const Rational& weight, int& sign, bool tl_sign) {
  for (int m = 2; m <= k; ++m) into[m] += weight;
  if (tl_sign && (static_cast<long>(k) * (k - 1) / 2) % 2 != 0) sign = -sign;
}

// theta in q-factorials (equal to the Temperley-Lieb theta at A = i q^{-1/4})
void theta_factorials(int a, int b, int c, const Rational& w, RadicalFactor& rad) {
  int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
  int dummy = 1;
  accumulate(rad, m + n + p + 1, w, dummy, false);
  accumulate(rad, m, w, dummy, false);
  accumulate(rad, n, w, dummy, false);
  accumulate(rad, p, w, dummy, false);
  accumulate(rad, m + n, -w, dummy, false);
  accumulate(rad, n + p, -w, dummy, false);
  accumulate(rad, m + p, -w, dummy, false);
}

// lambda(t) = (Da Db Dc)^{1/4} theta^{-1/2}
void vertex_rescale(int a, int b, int c, RadicalFactor& rad) {
  rad[a + 1] += Rational(1, 4);
  rad[b + 1] += Rational(1, 4);
  rad[c + 1] += Rational(1, 4);
  theta_factorials(a, b, c, Rational(-1, 2), rad);
}

struct TetSums {
  std::array<int, 4> lo;
  std::array<int, 3> hi;
};

// Triples (a,d,e), (b,c,e), (a,b,f), (c,d,f).
TetSums tet_bounds(int a, int b, int c, int d, int e, int f) {
  return TetSums{{(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2},
                 {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2}};
}

ExactValue tet_tl(int a, int b, int c, int d, int e, int f) {
  TetSums t = tet_bounds(a, b, c, d, e, f);
  RadicalFactor base;
  int base_sign = 1;
  for (int x : t.lo) {
    for (int y : t.hi) accumulate(base, y - x, 1, base_sign, true);
  }
  for (int x : {a, b, c, d, e, f}) accumulate(base, x, -1, base_sign, true);
  int m = *std::max_element(t.lo.begin(), t.lo.end());
  int M = *std::min_element(t.hi.begin(), t.hi.end());
  ExactValue sum;
  for (int s = m; s <= M; ++s) {
    RadicalFactor rad = base;
    int sign = base_sign * (s % 2 ? -1 : 1);
    accumulate(rad, s + 1, 1, sign, true);
    for (int x : t.lo) accumulate(rad, s - x, -1, sign, true);
    for (int y : t.hi) accumulate(rad, y - s, -1, sign, true);
    sum += ExactValue::from_summand(ExactSummand{LaurentQ(sign), rad, LaurentQ(1)});
  }
  return sum;
}

}  // namespace

std::string Spin::to_string() const {
  return twice_j % 2 == 0 ? std::to_string(twice_j / 2) : std::to_string(twice_j) + "/2";
}

bool admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return c <= a + b && a <= b + c && b <= a + c;
}

bool admissible(const SpinTriple& t) { return admissible(t.a.twice_j, t.b.twice_j, t.c.twice_j); }

std::vector<int> channels(int a, int b) {
  std::vector<int> out;
  for (int c = std::abs(a - b); c <= a + b; c += 2) out.push_back(c);
  return out;
}

void set_literal_crossing_phase(bool on) { g_literal_phase = on; }
bool literal_crossing_phase() { return g_literal_phase; }

ExactValue quantum_integer(long n) {
  if (n < 1) throw std::invalid_argument("quantum_integer needs n >= 1");
  return ExactValue::quantum_integer(n);
}

ExactValue delta(Spin j) { return ExactValue::delta(j.twice_j); }

ExactValue theta_wm(const SpinTriple& t) {
  require_triple(t.a.twice_j, t.b.twice_j, t.c.twice_j);
  RadicalFactor rad;
  for (Spin s : {t.a, t.b, t.c}) rad[s.twice_j + 1] += Rational(1, 2);
  return ExactValue::from_summand(ExactSummand{LaurentQ(1), rad, LaurentQ(1)});
}

ExactValue curl_phase(Spin j, Handedness h) {
  Rational c = j.casimir();
  return ExactValue::q_power(h == Handedness::Right ? Rational(-c) : c);
}

int vertex_reversal_sign(const SpinTriple& t) {
  int odd_sum = 0;
  for (Spin s : {t.a, t.b, t.c}) {
    if (s.is_half_integer()) odd_sum += s.twice_j;
  }
  // odd_sum is twice (ja + jb) for the two half-integer legs
  return (odd_sum / 2) % 2 == 0 ? 1 : -1;
}

ExactValue vertex_twist_phase(const SpinTriple& t) {
  require_triple(t.a.twice_j, t.b.twice_j, t.c.twice_j);
  int sum = (t.a.twice_j + t.b.twice_j + t.c.twice_j) / 2;
  Rational e = (t.a.casimir() + t.b.casimir() - t.c.casimir()) / 2;
  return ExactValue::q_power(e, sum % 2 ? -1 : 1);
}

ExactValue fusion_coefficient(Spin j1, Spin j2, Spin i) {
  require_triple(j1.twice_j, j2.twice_j, i.twice_j);
  RadicalFactor rad;
  rad[i.twice_j + 1] += Rational(1, 2);
  rad[j1.twice_j + 1] -= Rational(1, 2);
  rad[j2.twice_j + 1] -= Rational(1, 2);
  return ExactValue::from_summand(ExactSummand{LaurentQ(1), rad, LaurentQ(1)});
}

ExactValue crossing_coefficient(Spin j1, Spin j2, Spin i, CrossingSign sign) {
  ExactValue f = fusion_coefficient(j1, j2, i);
  int sum = (j1.twice_j + j2.twice_j + i.twice_j) / 2;
  Rational e = literal_crossing_phase() ? Rational((j1.casimir() + j2.casimir() + i.casimir()) / 2)
                                        : Rational((j1.casimir() + j2.casimir() - i.casimir()) / 2);
  if (sign == CrossingSign::Under) e = -e;
  return f * ExactValue::q_power(e, sum % 2 ? -1 : 1);
}

ExactValue tet(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l) {
  int a = j1.twice_j, b = j2.twice_j, c = j3.twice_j, d = j4.twice_j, e = j.twice_j, f = l.twice_j;
  require_triple(a, b, e);
  require_triple(c, d, e);
  require_triple(a, d, f);
  require_triple(b, c, f);
  TetKey key{a, b, c, d, e, f};
  {
    std::shared_lock lock(g_tet_mutex);
    auto it = g_tet_cache.find(key);
    if (it != g_tet_cache.end()) return it->second;
  }
  // Temperley-Lieb labelling: triples (a',d',e'), (b',c',e'), (a',b',f'), (c',d',f').
  ExactValue value = tet_tl(a, d, c, b, e, f);
  RadicalFactor rad;
  vertex_rescale(a, b, e, rad);
  vertex_rescale(c, d, e, rad);
  vertex_rescale(a, d, f, rad);
  vertex_rescale(b, c, f, rad);
  value *= ExactValue::from_summand(ExactSummand{LaurentQ(1), rad, LaurentQ(1)});
  std::unique_lock lock(g_tet_mutex);
  g_tet_cache.emplace(key, value);
  return value;
}

ExactValue racah_q(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l) {
  ExactValue t = tet(j1, j2, j3, j4, j, l);
  RadicalFactor rad;
  for (Spin s : {j1, j2, j3, j4}) rad[s.twice_j + 1] -= Rational(1, 2);
  return t * ExactValue::from_summand(ExactSummand{LaurentQ(1), rad, LaurentQ(1)});
}

ExactValue vertex_normalization(const SpinTriple& t, VertexOrientation o) {
  require_triple(t.a.twice_j, t.b.twice_j, t.c.twice_j);
  long sum = (t.a.twice_j + t.b.twice_j + t.c.twice_j) / 2;
  long prod = static_cast<long>(t.a.twice_j + 1) * (t.b.twice_j + 1) * (t.c.twice_j + 1);
  RadicalCoefficient phase = RadicalCoefficient::i_power(o == VertexOrientation::Plus ? sum : -sum);
  return ExactValue(phase * RadicalCoefficient::power(prod, Rational(1, 4)));
}

std::vector<std::pair<TetKey, ExactValue>> tet_cache_snapshot() {
  std::shared_lock lock(g_tet_mutex);
  return {g_tet_cache.begin(), g_tet_cache.end()};
}

void tet_cache_preload(const TetKey& key, const ExactValue& value) {
  std::unique_lock lock(g_tet_mutex);
  g_tet_cache.emplace(key, value);
}

namespace numeric {

namespace {

// Accumulates exponents per quantum-integer base, evaluated at the end so that
// fractional powers use the same per-base principal branch as the exact path.
struct Powers {
  std::map<int, long double> e;
  int sign = 1;
  void fact(int k, long double w, bool tl_sign) {
    for (int m = 2; m <= k; ++m) e[m] += w;
    if (tl_sign && (static_cast<long>(k) * (k - 1) / 2) % 2 != 0) sign = -sign;
  }
  Complex value(long double theta) const {
    Complex v = static_cast<long double>(sign);
    for (const auto& [n, w] : e) {
      if (w == 0) continue;
      Complex q = quantum_integer(n, theta);
      if (std::round(w) == w) v *= std::pow(q, static_cast<int>(w));
      else if (q.real() > 0 && q.imag() == 0) v *= std::pow(q.real(), w);
      else v *= std::pow(q, Complex(w));
    }
    return v;
  }
};

void theta_powers(int a, int b, int c, long double w, Powers& p) {
  int m = (a + b - c) / 2, n = (b + c - a) / 2, r = (a + c - b) / 2;
  p.fact(m + n + r + 1, w, false);
  p.fact(m, w, false);
  p.fact(n, w, false);
  p.fact(r, w, false);
  p.fact(m + n, -w, false);
  p.fact(n + r, -w, false);
  p.fact(m + r, -w, false);
}

void rescale_powers(int a, int b, int c, Powers& p) {
  p.e[a + 1] += 0.25L;
  p.e[b + 1] += 0.25L;
  p.e[c + 1] += 0.25L;
  theta_powers(a, b, c, -0.5L, p);
}

Complex tet_tl(int a, int b, int c, int d, int e, int f, long double theta) {
  TetSums t = tet_bounds(a, b, c, d, e, f);
  int m = *std::max_element(t.lo.begin(), t.lo.end());
  int M = *std::min_element(t.hi.begin(), t.hi.end());
  Powers base;
  for (int x : t.lo) {
    for (int y : t.hi) base.fact(y - x, 1, true);
  }
  for (int x : {a, b, c, d, e, f}) base.fact(x, -1, true);
  Complex sum = 0;
  for (int s = m; s <= M; ++s) {
    Powers p;
    p.sign = s % 2 ? -1 : 1;
    p.fact(s + 1, 1, true);
    for (int x : t.lo) p.fact(s - x, -1, true);
    for (int y : t.hi) p.fact(y - s, -1, true);
    sum += p.value(theta);
  }
  return sum * base.value(theta);
}

}  // namespace

Complex quantum_integer(long n, long double theta) {
  Complex s = 0;
  for (long m = 0; m < n; ++m) {
    long double ph = theta * (n - 1 - 2 * m) / 2.0L;
    s += Complex(std::cos(ph), std::sin(ph));
  }
  return s;
}

Complex delta(Spin j, long double theta) { return quantum_integer(j.twice_j + 1, theta); }

Complex theta_wm(const SpinTriple& t, long double theta) {
  require_triple(t.a.twice_j, t.b.twice_j, t.c.twice_j);
  Powers p;
  for (Spin s : {t.a, t.b, t.c}) p.e[s.twice_j + 1] += 0.5L;
  return p.value(theta);
}

Complex crossing_coefficient(Spin j1, Spin j2, Spin i, CrossingSign sign, long double theta) {
  require_triple(j1.twice_j, j2.twice_j, i.twice_j);
  Powers p;
  p.e[i.twice_j + 1] += 0.5L;
  p.e[j1.twice_j + 1] -= 0.5L;
  p.e[j2.twice_j + 1] -= 0.5L;
  int sum = (j1.twice_j + j2.twice_j + i.twice_j) / 2;
  long double e = literal_crossing_phase() ? to_long_double((j1.casimir() + j2.casimir() + i.casimir()) / 2)
                                           : to_long_double((j1.casimir() + j2.casimir() - i.casimir()) / 2);
  if (sign == CrossingSign::Under) e = -e;
  Complex phase(std::cos(theta * e), std::sin(theta * e));
  return p.value(theta) * phase * static_cast<long double>(sum % 2 ? -1 : 1);
}

Complex tet(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l, long double theta) {
  int a = j1.twice_j, b = j2.twice_j, c = j3.twice_j, d = j4.twice_j, e = j.twice_j, f = l.twice_j;
  require_triple(a, b, e);
  require_triple(c, d, e);
  require_triple(a, d, f);
  require_triple(b, c, f);
  Powers p;
  rescale_powers(a, b, e, p);
  rescale_powers(c, d, e, p);
  rescale_powers(a, d, f, p);
  rescale_powers(b, c, f, p);
  return tet_tl(a, d, c, b, e, f, theta) * p.value(theta);
}

Complex racah_q(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l, long double theta) {
  Powers p;
  for (Spin s : {j1, j2, j3, j4}) p.e[s.twice_j + 1] -= 0.5L;
  return tet(j1, j2, j3, j4, j, l, theta) * p.value(theta);
}

}  // namespace numeric

}  // namespace spinnet
