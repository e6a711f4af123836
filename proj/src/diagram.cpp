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

#include "spinnet/diagram.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spinnet {

NodeId Diagram::add_vertex(VertexOrientation o) {
  Node n;
  n.id = next_node_++;
  n.kind = NodeKind::Vertex;
  n.orient = o;
  n.slots.assign(3, -1);
  nodes_.emplace(n.id, n);
  return n.id;
}

NodeId Diagram::add_crossing(int over) {
  Node n;
  n.id = next_node_++;
  n.kind = NodeKind::Crossing;
  n.over = over & 1;
  n.slots.assign(4, -1);
  nodes_.emplace(n.id, n);
  return n.id;
}

EdgeId Diagram::add_edge(Spin s, EdgeEnd tail, EdgeEnd head) {
  if (tail == head) throw std::invalid_argument("edge ends coincide");
  for (const EdgeEnd& x : {tail, head}) {
    Node& n = nodes_.at(x.node);
    if (x.slot < 0 || x.slot >= n.degree()) throw std::invalid_argument("slot out of range");
    if (n.slots[x.slot] != -1) throw std::invalid_argument("slot already occupied");
  }
  Edge e;
  e.id = next_edge_++;
  e.spin = s;
  e.ends = {tail, head};
  nodes_.at(tail.node).slots[tail.slot] = e.id;
  nodes_.at(head.node).slots[head.slot] = e.id;
  edges_.emplace(e.id, e);
  return e.id;
}

EdgeId Diagram::add_loop(Spin s) {
  Edge e;
  e.id = next_edge_++;
  e.spin = s;
  e.loop = true;
  edges_.emplace(e.id, e);
  return e.id;
}

void Diagram::detach(EdgeId e, int end) {
  Edge& ed = edges_.at(e);
  EdgeEnd& x = ed.ends[end];
  if (x.node >= 0) {
    auto it = nodes_.find(x.node);
    if (it != nodes_.end() && it->second.slots[x.slot] == e) it->second.slots[x.slot] = -1;
  }
  x = EdgeEnd{};
}

void Diagram::attach(EdgeId e, int end, EdgeEnd at) {
  Node& n = nodes_.at(at.node);
  if (n.slots.at(at.slot) != -1) throw std::invalid_argument("slot already occupied");
  Edge& ed = edges_.at(e);
  if (ed.ends[end].node >= 0) detach(e, end);
  ed.loop = false;
  ed.ends[end] = at;
  n.slots[at.slot] = e;
}

void Diagram::remove_edge(EdgeId e) {
  if (!edges_.at(e).loop) {
    detach(e, 0);
    detach(e, 1);
  }
  edges_.erase(e);
}

void Diagram::remove_node(NodeId n) {
  const Node& nd = nodes_.at(n);
  for (int k = 0; k < nd.degree(); ++k) {
    EdgeId e = nd.slots[k];
    if (e < 0) continue;
    Edge& ed = edges_.at(e);
    for (auto& x : ed.ends) {
      if (x.node == n && x.slot == k) x = EdgeEnd{};
    }
  }
  nodes_.erase(n);
}

void Diagram::insert_raw(Node n) {
  next_node_ = std::max(next_node_, n.id + 1);
  nodes_[n.id] = std::move(n);
}

void Diagram::insert_raw(Edge e) {
  next_edge_ = std::max(next_edge_, e.id + 1);
  edges_[e.id] = e;
}

int Diagram::vertex_count() const {
  return static_cast<int>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const auto& p) { return p.second.kind == NodeKind::Vertex; }));
}

int Diagram::crossing_count() const { return static_cast<int>(nodes_.size()) - vertex_count(); }

int Diagram::end_at(NodeId n, int slot) const {
  const Edge& e = edges_.at(nodes_.at(n).slots.at(slot));
  if (e.ends[0] == EdgeEnd{n, slot}) return 0;
  if (e.ends[1] == EdgeEnd{n, slot}) return 1;
  throw std::logic_error("slot and edge disagree");
}

Dart Diagram::dart_out(NodeId n, int slot) const { return Dart{nodes_.at(n).slots.at(slot), end_at(n, slot)}; }

Dart Diagram::face_next(const Dart& d) const {
  EdgeEnd h = head(d);
  const Node& n = nodes_.at(h.node);
  return dart_out(h.node, (h.slot + 1) % n.degree());
}

SpinTriple Diagram::triple(NodeId vertex) const {
  const Node& n = nodes_.at(vertex);
  return SpinTriple{edges_.at(n.slots[0]).spin, edges_.at(n.slots[1]).spin, edges_.at(n.slots[2]).spin};
}

std::vector<Violation> validate(const Diagram& d) {
  std::vector<Violation> out;
  auto node_str = [](NodeId n) { return "node " + std::to_string(n); };
  auto edge_str = [](EdgeId e) { return "edge " + std::to_string(e); };
  bool structural = true;
  for (const auto& [id, n] : d.nodes()) {
    int want = n.kind == NodeKind::Vertex ? 3 : 4;
    if (n.degree() != want) {
      out.push_back({node_str(id) + ": expected " + std::to_string(want) + " slots", id, {}});
      structural = false;
      continue;
    }
    if (n.kind == NodeKind::Crossing && (n.over < 0 || n.over > 1)) {
      out.push_back({node_str(id) + ": over strand must be slots (0,2) or (1,3)", id, {}});
    }
    for (int k = 0; k < n.degree(); ++k) {
      EdgeId e = n.slots[k];
      if (e < 0 || !d.has_edge(e)) {
        out.push_back({node_str(id) + ": slot " + std::to_string(k) + " has no edge", id, {}});
        structural = false;
        continue;
      }
      const Edge& ed = d.edge(e);
      if (ed.loop || (ed.ends[0] != EdgeEnd{id, k} && ed.ends[1] != EdgeEnd{id, k})) {
        out.push_back({node_str(id) + ": slot " + std::to_string(k) + " not referenced by " + edge_str(e), id, e});
        structural = false;
      }
    }
  }
  for (const auto& [id, e] : d.edges()) {
    if (e.spin.twice_j < 0) out.push_back({edge_str(id) + ": negative spin", {}, id});
    if (e.loop) continue;
    if (e.ends[0] == e.ends[1]) {
      out.push_back({edge_str(id) + ": both ends reference the same slot", {}, id});
      structural = false;
    }
    for (const EdgeEnd& x : e.ends) {
      if (!d.has_node(x.node) || x.slot < 0 || x.slot >= d.node(x.node).degree() ||
          d.node(x.node).slots[x.slot] != id) {
        out.push_back({edge_str(id) + ": dangling end", x.node >= 0 ? std::optional<NodeId>(x.node) : std::nullopt, id});
        structural = false;
      }
    }
  }
  if (!structural) return out;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind == NodeKind::Vertex) {
      SpinTriple t = d.triple(id);
      if (!admissible(t)) {
        out.push_back({node_str(id) + ": inadmissible spin triple (" + t.a.to_string() + ", " + t.b.to_string() + ", " +
                           t.c.to_string() + ")",
                       id, {}});
      }
    } else {
      for (int k = 0; k < 2; ++k) {
        if (d.edge(n.slots[k]).spin != d.edge(n.slots[k + 2]).spin) {
          out.push_back({node_str(id) + ": strand through slots " + std::to_string(k) + "," + std::to_string(k + 2) +
                             " changes spin",
                         id, {}});
        }
      }
    }
  }
  std::vector<int> chi = euler_characteristics(d);
  for (int c : chi) {
    if (c != 2) {
      out.push_back({"rotation system is not planar (Euler characteristic " + std::to_string(c) + ")", {}, {}});
      break;
    }
  }
  return out;
}

std::vector<std::vector<Dart>> faces(const Diagram& d) {
  std::set<Dart> seen;
  std::vector<std::vector<Dart>> out;
  for (const auto& [id, e] : d.edges()) {
    if (e.loop) continue;
    for (int end = 0; end < 2; ++end) {
      Dart start{id, end};
      if (seen.count(start)) continue;
      std::vector<Dart> face;
      Dart cur = start;
      do {
        seen.insert(cur);
        face.push_back(cur);
        cur = d.face_next(cur);
      } while (cur != start);
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<Component> components(const Diagram& d) {
  std::map<NodeId, NodeId> parent;
  for (const auto& [id, n] : d.nodes()) parent[id] = id;
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [id, e] : d.edges()) {
    if (e.loop) continue;
    NodeId a = find(e.ends[0].node), b = find(e.ends[1].node);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<NodeId, Component> by_root;
  for (const auto& [id, n] : d.nodes()) by_root[find(id)].nodes.push_back(id);
  std::vector<Component> out;
  for (const auto& [id, e] : d.edges()) {
    if (e.loop) out.push_back(Component{{}, {id}});
    else by_root[find(e.ends[0].node)].edges.push_back(id);
  }
  for (auto& [r, c] : by_root) out.push_back(std::move(c));
  return out;
}

std::vector<int> euler_characteristics(const Diagram& d) {
  std::vector<int> out;
  auto fs = faces(d);
  for (const Component& c : components(d)) {
    if (c.nodes.empty()) {
      out.push_back(2);
      continue;
    }
    std::set<EdgeId> es(c.edges.begin(), c.edges.end());
    int f = 0;
    for (const auto& face : fs) {
      if (es.count(face.front().edge)) ++f;
    }
    out.push_back(static_cast<int>(c.nodes.size()) - static_cast<int>(c.edges.size()) + f);
  }
  return out;
}

std::map<EdgeId, bool> odd_orientation(const Diagram& d) {
  std::map<EdgeId, bool> dir;
  for (const auto& [id, e] : d.edges()) {
    if (!e.spin.is_half_integer() || dir.count(id)) continue;
    dir[id] = true;
    if (e.loop) continue;
    Dart cur{id, 0};
    for (;;) {
      EdgeEnd h = d.head(cur);
      const Node& n = d.node(h.node);
      int out_slot = -1;
      if (n.kind == NodeKind::Crossing) {
        out_slot = (h.slot + 2) % 4;
      } else {
        for (int k = 0; k < 3; ++k) {
          if (k != h.slot && d.edge(n.slots[k]).spin.is_half_integer()) out_slot = k;
        }
      }
      if (out_slot < 0) throw std::logic_error("odd strand ends at a vertex");
      Dart next = d.dart_out(h.node, out_slot);
      if (dir.count(next.edge)) break;
      dir[next.edge] = next.end == 0;
      cur = next;
    }
  }
  return dir;
}

int crossing_sign(const Diagram& d, NodeId crossing, const std::map<EdgeId, bool>& orientation) {
  const Node& n = d.node(crossing);
  auto out_slot = [&](int k) {
    EdgeId e = n.slots[k];
    auto it = orientation.find(e);
    if (it == orientation.end()) return -1;
    int tail_end = it->second ? 0 : 1;
    return d.end_at(crossing, k) == tail_end ? k : (k + 2) % 4;
  };
  int over_out = out_slot(n.over);
  int under_out = out_slot(n.over + 1);
  if (over_out < 0 || under_out < 0) return 0;
  return under_out == (over_out + 1) % 4 ? 1 : -1;
}

int writhe(const Diagram& d) {
  auto dir = odd_orientation(d);
  int w = 0;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind == NodeKind::Crossing) w += crossing_sign(d, id, dir);
  }
  return w;
}

std::vector<std::vector<EdgeId>> link_components(const Diagram& d) {
  std::set<EdgeId> seen;
  std::vector<std::vector<EdgeId>> out;
  for (const auto& [id, e] : d.edges()) {
    if (seen.count(id)) continue;
    std::vector<EdgeId> strand{id};
    seen.insert(id);
    if (!e.loop) {
      Dart cur{id, 0};
      for (;;) {
        EdgeEnd h = d.head(cur);
        const Node& n = d.node(h.node);
        if (n.kind != NodeKind::Crossing) throw std::invalid_argument("link_components needs a crossing-only diagram");
        Dart next = d.dart_out(h.node, (h.slot + 2) % 4);
        if (seen.count(next.edge)) break;
        seen.insert(next.edge);
        strand.push_back(next.edge);
        cur = next;
      }
    }
    out.push_back(std::move(strand));
  }
  return out;
}

namespace {

struct FlatNode {
  int kind = 0;
  int over = 0;  // orientation bit for vertices, over slot for crossings
  int deg = 0;
  std::array<int, 4> nbr{};
  std::array<int, 4> nbr_slot{};
  std::array<long, 4> spin{};
};

std::vector<FlatNode> flatten(const Diagram& d, const std::vector<NodeId>& nodes) {
  std::map<NodeId, int> local;
  for (NodeId n : nodes) local.emplace(n, static_cast<int>(local.size()));
  std::vector<FlatNode> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = d.node(nodes[i]);
    FlatNode& f = out[i];
    f.kind = n.kind == NodeKind::Vertex ? 0 : 1;
    f.over = n.kind == NodeKind::Vertex ? (n.orient == VertexOrientation::Plus ? 0 : 1) : n.over;
    f.deg = n.degree();
    for (int k = 0; k < f.deg; ++k) {
      const Edge& ed = d.edge(n.slots[k]);
      EdgeEnd other = ed.ends[1 - d.end_at(n.id, k)];
      f.nbr[k] = local.at(other.node);
      f.nbr_slot[k] = other.slot;
      f.spin[k] = ed.spin.twice_j;
    }
  }
  return out;
}

// Code of the component rooted at (root, root_slot). Returns false as soon as the
// prefix is worse than `best`; `code` is then incomplete.
bool rooted_code(const std::vector<FlatNode>& g, int root, int root_slot, const std::vector<long>& best,
                 std::vector<long>& code, std::vector<int>& index, std::vector<int>& start, std::vector<int>& order) {
  std::fill(index.begin(), index.end(), -1);
  order.clear();
  code.clear();
  order.push_back(root);
  index[root] = 0;
  start[root] = root_slot;
  bool tied = !best.empty();
  auto emit = [&](long x) {
    if (tied) {
      long b = best[code.size()];
      if (x > b) return false;
      if (x < b) tied = false;
    }
    code.push_back(x);
    return true;
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    const FlatNode& n = g[order[i]];
    int s = start[order[i]], deg = n.deg;
    if (!emit(n.kind)) return false;
    if (!emit(n.kind == 0 ? n.over : ((n.over - s) % 2 + 2) % 2)) return false;
    for (int k = 0; k < deg; ++k) {
      int slot = (s + k) % deg;
      int other = n.nbr[slot];
      if (index[other] < 0) {
        index[other] = static_cast<int>(order.size());
        start[other] = n.nbr_slot[slot];
        order.push_back(other);
      }
      int odeg = g[other].deg;
      if (!emit(n.spin[slot])) return false;
      if (!emit(index[other])) return false;
      if (!emit(((n.nbr_slot[slot] - start[other]) % odeg + odeg) % odeg)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<long> canonical_code(const Diagram& d) {
  std::vector<std::vector<long>> parts;
  for (const Component& c : components(d)) {
    if (c.nodes.empty()) {
      parts.push_back({-1, d.edge(c.edges[0]).spin.twice_j});
      continue;
    }
    std::vector<FlatNode> g = flatten(d, c.nodes);
    std::vector<long> best, code;
    std::vector<int> index(g.size()), start(g.size()), order;
    for (int n = 0; n < static_cast<int>(g.size()); ++n) {
      for (int k = 0; k < g[n].deg; ++k) {
        if (rooted_code(g, n, k, best, code, index, start, order)) std::swap(best, code);
      }
    }
    best.insert(best.begin(), static_cast<long>(c.nodes.size()));
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<long> out;
  for (auto& p : parts) {
    out.push_back(static_cast<long>(p.size()));
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  Diagram out = compact(a);
  NodeId node_offset = static_cast<NodeId>(out.nodes().size());
  EdgeId edge_offset = static_cast<EdgeId>(out.edges().size());
  Diagram cb = compact(b);
  for (auto [id, n] : cb.nodes()) {
    n.id += node_offset;
    for (EdgeId& e : n.slots) e += edge_offset;
    out.insert_raw(std::move(n));
  }
  for (auto [id, e] : cb.edges()) {
    e.id += edge_offset;
    if (!e.loop) {
      for (EdgeEnd& x : e.ends) x.node += node_offset;
    }
    out.insert_raw(e);
  }
  return out;
}

Diagram flip(const Diagram& d) {
  Diagram out = d;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind == NodeKind::Crossing) {
      out.set_over(id, 1 - n.over);
    } else {
      out.set_orientation(id, n.orient == VertexOrientation::Plus ? VertexOrientation::Minus : VertexOrientation::Plus);
    }
  }
  return out;
}

Diagram compact(const Diagram& d) {
  std::map<NodeId, NodeId> nmap;
  std::map<EdgeId, EdgeId> emap;
  for (const auto& [id, n] : d.nodes()) nmap[id] = static_cast<NodeId>(nmap.size());
  for (const auto& [id, e] : d.edges()) emap[id] = static_cast<EdgeId>(emap.size());
  Diagram out;
  for (auto [id, n] : d.nodes()) {
    n.id = nmap.at(id);
    for (EdgeId& e : n.slots) e = e < 0 ? -1 : emap.at(e);
    out.insert_raw(std::move(n));
  }
  for (auto [id, e] : d.edges()) {
    e.id = emap.at(id);
    if (!e.loop) {
      for (EdgeEnd& x : e.ends) {
        if (x.node >= 0) x.node = nmap.at(x.node);
      }
    }
    out.insert_raw(e);
  }
  return out;
}

}  // namespace spinnet
