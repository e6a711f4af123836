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

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinnet/diagram.hpp"

namespace spinnet {

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MoveKind { CurlAdd, CurlRemove, R2Add, R2Remove, R3, VertexTwist, BeltTwist, RungInsert, Flip };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

/**
 * A local move and its site. Fields not used by a kind are ignored.
 *
 *  CurlAdd     dart, hand, left_side (loop on the left of dart instead of the right)
 *  CurlRemove  node
 *  R2Add       dart, dart2 on a common face (face on their right); first_over
 *  R2Remove    dart in a bigon face
 *  R3          dart in a triangular face
 *  VertexTwist node, slot (leg the twist is taken across), hand
 *  BeltTwist   cluster (tree of vertices), node/slot (stem leg), hand
 *  RungInsert  dart, dart2 on a common face, spin of the rung
 *
 * Twists with Handedness::Right make the crossings negative when all twisted
 * legs are oriented away from the cluster.
 */
struct Move {
  MoveKind kind = MoveKind::Flip;
  Dart dart;
  Dart dart2;
  NodeId node = -1;
  int slot = 0;
  Handedness hand = Handedness::Right;
  bool left_side = false;
  bool first_over = true;
  Spin spin;
  std::vector<NodeId> cluster;
};

std::string describe(const Move& m);

Diagram apply_move(const Diagram& d, const Move& m);

/** Sign (+1 right, -1 left) of the kink at a crossing whose two adjacent slots are joined by one edge. */
int curl_sign(const Diagram& d, NodeId crossing);

/**
 * All sites of a kind in d. Twist/curl sites are listed once per handedness; belt
 * clusters are trees of up to max_cluster vertices; rung spins range over the
 * admissible values up to max_rung (twice-spin).
 */
std::vector<Move> enumerate_sites(const Diagram& d, MoveKind kind, int max_cluster = 3, int max_rung = 2);

/** A uniformly chosen site, if any. */
std::optional<Move> random_site(const Diagram& d, MoveKind kind, std::mt19937_64& rng, int max_cluster = 3,
                              int max_rung = 2);

}  // namespace spinnet
