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
#include <stdexcept>
#include <string>
#include <vector>

#include "spinnet/evaluator.hpp"
#include "spinnet/moves.hpp"
#include "spinnet/scalar_io.hpp"

namespace spinnet {

/** The classical value K0 vanishes, so P and the v_i are undefined. */
class ClassicallyNull : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

constexpr int kDefaultSeriesOrder = 6;

struct AmbientResult {
  ExactValue E;
  ExactValue K0;
  std::optional<RadicalCoefficient> v1;
  /** Set when K0 != 0 and v1 is rational. */
  std::optional<ExactValue> P;
  /** log P to the requested order; its kappa^0 and kappa^1 terms vanish. */
  std::optional<KappaSeries> log_P;
  /** v_2 .. v_N */
  std::map<int, RadicalCoefficient> vassiliev;
  /** Why P is missing, if it is. */
  std::string note;
};

/** q -> 1 value of E. */
ExactValue classical_value(const Diagram& d);
/** kappa^1 coefficient of log(E / K0). */
RadicalCoefficient v1(const Diagram& d);

AmbientResult ambient_invariant(const Diagram& d, int order = kDefaultSeriesOrder);
/** Same construction from an already computed E. */
AmbientResult ambient_from_value(const ExactValue& E, int order = kDefaultSeriesOrder);

struct MoveCheck {
  Move move;
  bool passed = false;
  /** P(after) - expected; zero when passed. */
  ExactValue residual;
  /** E(after) / E(before), when E(before) != 0. */
  std::optional<ExactValue> e_ratio;
  std::string detail;
};

/**
 * P(apply_move(d, m)) against P(d); for Flip the expectation is P with
 * q -> 1/q (and i -> -i).
 */
MoveCheck check_move_invariance(const Diagram& d, const Move& m, int order = kDefaultSeriesOrder);
/** Up to max_sites sites of each kind (all when max_sites <= 0). */
std::vector<MoveCheck> check_move_invariance(const Diagram& d, const std::vector<MoveKind>& kinds, int max_sites = 0,
                                             int order = kDefaultSeriesOrder);

Json to_json(const AmbientResult& r);
Json to_json(const MoveCheck& c);

}  // namespace spinnet
