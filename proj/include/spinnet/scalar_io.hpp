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

#include <json.hpp>
#include <string>

#include "spinnet/exact_value.hpp"

namespace spinnet {

using Json = nlohmann::json;

/**
 * A value with one summand is written as
 *   {"terms":[{"q_exp":"-3/4","coeff":[{"rat":"1/2","rad":{"2":"1/2"}}]}],
 *    "den":[...], "radical":{"delta_1":"1/4"}}
 * and a value with several summands as {"sum":[<summand>, ...]}.
 * Radical keys "delta_<two_j>" name Delta for spin two_j/2; the coefficient
 * radical key "-1" is the imaginary unit.
 */
Json to_json(const ExactValue& v);
ExactValue exact_value_from_json(const Json& j);

Json to_json(const RadicalCoefficient& c);
RadicalCoefficient radical_from_json(const Json& j);
Json to_json(const LaurentQ& p);
LaurentQ laurent_from_json(const Json& j);
Json to_json(const KappaSeries& s);

std::string format_complex(const Complex& z, int digits);

}  // namespace spinnet
