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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinnet/recoupling.hpp"

namespace spinnet {

using NodeId = int;
using EdgeId = int;

enum class NodeKind { Vertex, Crossing };

struct EdgeEnd {
  NodeId node = -1;
  int slot = -1;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
  EdgeId id = -1;
  Spin spin;
  /** Free loops have no ends. */
  bool loop = false;
  std::array<EdgeEnd, 2> ends;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Node {
  NodeId id = -1;
  NodeKind kind = NodeKind::Vertex;
  VertexOrientation orient = VertexOrientation::Plus;
  /** Crossings only: the over strand uses slots {over, over + 2}, over in {0, 1}. */
  int over = 0;
  /** Counterclockwise. */
  std::vector<EdgeId> slots;
  int degree() const { return static_cast<int>(slots.size()); }
  friend bool operator==(const Node&, const Node&) = default;
};

/**
 * Half-edge: edge `edge` traversed away from ends[end].
 */
struct Dart {
  EdgeId edge = -1;
  int end = 0;
  Dart reversed() const { return Dart{edge, 1 - end}; }
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Violation {
  std::string message;
  std::optional<NodeId> node;
  std::optional<EdgeId> edge;
};

/**
 * Blackboard-framed projection with spin-labelled edges. The planar embedding is
 * the rotation system given by the slot order at each node.
 */
class Diagram {
 public:
  NodeId add_vertex(VertexOrientation o = VertexOrientation::Plus);
  NodeId add_crossing(int over);
  /** Fills the two slots; they must be free. */
  EdgeId add_edge(Spin s, EdgeEnd tail, EdgeEnd head);
  EdgeId add_loop(Spin s);
  void remove_edge(EdgeId e);
  void remove_node(NodeId n);
  void set_spin(EdgeId e, Spin s) { edges_.at(e).spin = s; }
  void set_orientation(NodeId n, VertexOrientation o) { nodes_.at(n).orient = o; }
  void set_over(NodeId n, int over) { nodes_.at(n).over = over; }
  /** Detach an edge end and leave the slot empty (-1). */
  void detach(EdgeId e, int end);
  void attach(EdgeId e, int end, EdgeEnd at);

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const Node& node(NodeId n) const { return nodes_.at(n); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  bool has_node(NodeId n) const { return nodes_.count(n) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }

  int vertex_count() const;
  int crossing_count() const;
  bool crossing_free() const { return crossing_count() == 0; }

  /** The edge end sitting in (node, slot). */
  int end_at(NodeId n, int slot) const;
  /** Dart leaving node n through slot. */
  Dart dart_out(NodeId n, int slot) const;
  EdgeEnd head(const Dart& d) const { return edges_.at(d.edge).ends[1 - d.end]; }
  EdgeEnd tail(const Dart& d) const { return edges_.at(d.edge).ends[d.end]; }
  /** Next dart on the same face. */
  Dart face_next(const Dart& d) const;
  SpinTriple triple(NodeId vertex) const;

  /** Same ids, same data. */
  friend bool operator==(const Diagram& a, const Diagram& b) { return a.nodes_ == b.nodes_ && a.edges_ == b.edges_; }

 private:
  std::map<NodeId, Node> nodes_;
  std::map<EdgeId, Edge> edges_;
  NodeId next_node_ = 0;
  EdgeId next_edge_ = 0;

 public:
  /** Insert with a fixed id, slots and ends taken as given (parsing). */
  void insert_raw(Node n);
  void insert_raw(Edge e);
};

std::vector<Violation> validate(const Diagram& d);

/** Faces as dart cycles; free loops are not listed. */
std::vector<std::vector<Dart>> faces(const Diagram& d);
/** Per connected component V - E + F; 2 for every component of a sphere embedding. */
std::vector<int> euler_characteristics(const Diagram& d);

/** Connected components as node sets (free loops are singleton components with no nodes). */
struct Component {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
};
std::vector<Component> components(const Diagram& d);

/**
 * Coherent orientation of all half-integer edges: each odd strand is followed
 * straight through crossings and from one odd leg to the other at vertices.
 * Value true means the edge runs ends[0] -> ends[1].
 */
std::map<EdgeId, bool> odd_orientation(const Diagram& d);

/**
 * Oriented sign of a crossing whose strands are both oriented (odd spins), +1 or -1.
 * Returns 0 when either strand carries an integer spin.
 */
int crossing_sign(const Diagram& d, NodeId crossing, const std::map<EdgeId, bool>& orientation);
/** Sum of crossing signs over odd-odd crossings. */
int writhe(const Diagram& d);

/** Strands: closed curves formed by walking straight through crossings (only for crossing-only diagrams). */
std::vector<std::vector<EdgeId>> link_components(const Diagram& d);

/** Relabelling-invariant code; equal iff the diagrams are isomorphic as embedded graphs. */
std::vector<long> canonical_code(const Diagram& d);

Diagram disjoint_union(const Diagram& a, const Diagram& b);
/** Switch every crossing, reverse every vertex orientation. */
Diagram flip(const Diagram& d);
/** Reassign dense ids 0.. in order. */
Diagram compact(const Diagram& d);

}  // namespace spinnet
