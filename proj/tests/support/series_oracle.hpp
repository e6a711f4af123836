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

#include <vector>

#include "spinnet/exact_value.hpp"

namespace spinnet::oracle {

/** Value of `v` at q = exp(kappa) for complex kappa near 0, summed directly. */
Complex value_at_kappa(const ExactValue& v, Complex kappa);

/**
 * Taylor coefficients of kappa -> v(exp(kappa)) by a discrete contour integral
 * on |kappa| = radius. Shares no code with the exact series expansion.
 */
std::vector<Complex> taylor_coefficients(const ExactValue& v, int order, long double radius = 0.5L);

/** Coefficients of log(v(kappa) / v(0)). */
std::vector<Complex> log_taylor_coefficients(const ExactValue& v, int order, long double radius = 0.5L);

}  // namespace spinnet::oracle
