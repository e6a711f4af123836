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

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinnet/exact_value.hpp"

namespace spinnet {

/** Spin j stored as 2j. */
struct Spin {
  int twice_j = 0;
  constexpr Spin() = default;
  constexpr explicit Spin(int two_j) : twice_j(two_j) {}
  bool is_half_integer() const { return twice_j % 2 != 0; }
  /** j(j+1) */
  Rational casimir() const { return Rational(twice_j * (twice_j + 2), 4); }
  std::string to_string() const;
  friend bool operator==(Spin a, Spin b) { return a.twice_j == b.twice_j; }
  friend auto operator<=>(Spin a, Spin b) { return a.twice_j <=> b.twice_j; }
};

struct SpinTriple {
  Spin a, b, c;
};

enum class VertexOrientation { Plus, Minus };
enum class Handedness { Right, Left };
/** Over carries the phase q^{+(c1+c2-ci)/2}, Under the conjugate. */
enum class CrossingSign { Over, Under };

class InadmissibleSpins : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool admissible(int a, int b, int c);
bool admissible(const SpinTriple& t);
/** Channels c with (a, b, c) admissible, as twice-spins in increasing order. */
std::vector<int> channels(int a, int b);

ExactValue quantum_integer(long n);
ExactValue delta(Spin j);
ExactValue theta_wm(const SpinTriple& t);
ExactValue curl_phase(Spin j, Handedness h);
/** The third spin is the leg the twist is taken across. */
ExactValue vertex_twist_phase(const SpinTriple& t);
ExactValue fusion_coefficient(Spin j1, Spin j2, Spin i);
ExactValue crossing_coefficient(Spin j1, Spin j2, Spin i, CrossingSign sign);

/**
 * Tetrahedron with vertices (j1,j2,j), (j3,j4,j), (j1,j4,l), (j2,j3,l),
 * in the normalization where a theta graph is sqrt(Da Db Dc).
 */
ExactValue tet(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l);
/** tet / sqrt(D1 D2 D3 D4): the coefficient of the (j1,j4,l),(j2,j3,l) tree. */
ExactValue racah_q(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l);
ExactValue vertex_normalization(const SpinTriple& t, VertexOrientation o);

/** (-1)^{ja+jb} over the two half-integer legs; 1 for all-integer triples. */
int vertex_reversal_sign(const SpinTriple& t);

/** Debug switch: use the (h1+h2+h3) channel phase instead of (h1+h2-h3). */
void set_literal_crossing_phase(bool on);
bool literal_crossing_phase();

/** Numeric counterparts evaluated directly in complex arithmetic at q = exp(i theta). */
namespace numeric {
Complex quantum_integer(long n, long double theta);
Complex delta(Spin j, long double theta);
Complex theta_wm(const SpinTriple& t, long double theta);
Complex crossing_coefficient(Spin j1, Spin j2, Spin i, CrossingSign sign, long double theta);
Complex tet(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l, long double theta);
Complex racah_q(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l, long double theta);
}  // namespace numeric

/** Memo table access for on-disk caching. Keys are the six twice-spins. */
using TetKey = std::array<int, 6>;
std::vector<std::pair<TetKey, ExactValue>> tet_cache_snapshot();
void tet_cache_preload(const TetKey& key, const ExactValue& value);

}  // namespace spinnet
