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

#include "bracket.hpp"

namespace spinnet::oracle {

/**
 * E(D) = epsilon^{#components} * (i^rho)^{writhe(D)} * <D> at A = i^alpha q^{beta/4}.
 */
struct BridgeMap {
  int alpha = 0;  // power of i, 0..3
  int beta = 1;   // +1 or -1
  int rho = 0;    // power of i, 0..3
  int epsilon = 1;
  friend bool operator==(const BridgeMap&, const BridgeMap&) = default;
  std::string to_string() const;
};

/** Fitted on the unknot, the right-curled unknot and the Hopf link, then frozen. */
extern const BridgeMap kFrozenBridge;

ExactValue apply_bridge(const APoly& bracket, int writhe, int components, const BridgeMap& map);
ExactValue bridged_bracket(const Diagram& d, const BridgeMap& map = kFrozenBridge);

/** Every map in the search space under which the bracket reproduces the evaluator on all of `training`. */
std::vector<BridgeMap> fit_bridge(const std::vector<Diagram>& training);

/** The training set used for the frozen map. */
std::vector<Diagram> bridge_training_set();

}  // namespace spinnet::oracle
