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
#include <string>
#include <string_view>
#include <vector>

#include "spinnet/diagram.hpp"

namespace spinnet {

Diagram unknot(Spin j);
/** Unknot with one curl; Right is the positive kink. */
Diagram curl(Spin j, Handedness h);
Diagram unlink(Spin j1, Spin j2);
Diagram theta(Spin a, Spin b, Spin c);
/** Vertices (j1,j2,j), (j3,j4,j), (j1,j4,l), (j2,j3,l). */
Diagram tetrahedron(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l);
Diagram trefoil(Spin j);
Diagram figure8(Spin j);
Diagram hopf(Spin j1, Spin j2);

/**
 * Planar diagram code. Each X[i,j,k,l] lists arc labels counterclockwise starting
 * with the incoming under-strand; every label occurs exactly twice.
 */
Diagram from_pd(const std::vector<std::array<int, 4>>& pd, Spin j);

/**
 * Closure of a braid on `strands` strands. Generator +i (1-based) is a positive
 * crossing between positions i and i+1, -i its inverse.
 */
Diagram braid_closure(int strands, const std::vector<int>& word, Spin j);

/** Assign spins to link components in order of their smallest edge id. */
void set_component_spins(Diagram& d, const std::vector<Spin>& spins);

/** "name:key=value,..." e.g. "unknot:j=1", "hopf:j1=1/2,j2=1", "theta:a=1/2,b=1/2,c=1". */
Diagram builtin(std::string_view spec);
std::vector<std::string> builtin_names();

Spin parse_spin(std::string_view text);

}  // namespace spinnet
