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

#include "spinnet/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace spinnet {

namespace {

const std::vector<std::pair<MoveKind, std::string>> kKindNames = {
    {MoveKind::CurlAdd, "curl-add"},     {MoveKind::CurlRemove, "curl-remove"}, {MoveKind::R2Add, "r2-add"},
    {MoveKind::R2Remove, "r2-remove"},   {MoveKind::R3, "r3"},                  {MoveKind::VertexTwist, "vertex-twist"},
    {MoveKind::BeltTwist, "belt-twist"}, {MoveKind::RungInsert, "rung"},        {MoveKind::Flip, "flip"},
};

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<Dart> face_of(const Diagram& d, const Dart& start) {
  std::vector<Dart> out;
  Dart cur = start;
  do {
    out.push_back(cur);
    cur = d.face_next(cur);
    if (out.size() > 4 * d.edges().size() + 4) throw std::logic_error("face walk does not close");
  } while (cur != start);
  return out;
}

void require_dart(const Diagram& d, const Dart& x) {
  if (!d.has_edge(x.edge)) throw MoveError("no edge " + std::to_string(x.edge));
  if (x.end < 0 || x.end > 1) throw MoveError("dart end must be 0 or 1");
}

bool is_over(const Node& n, int slot) { return slot % 2 == n.over; }

/**
 * Remove `gone` nodes and `internal` edges; each pair in `through` names two slots
 * on removed nodes that become connected. The edges met along each chain merge.
 */
void bypass(Diagram& out, const Diagram& orig, const std::vector<std::pair<EdgeEnd, EdgeEnd>>& through,
            const std::set<NodeId>& gone, const std::set<EdgeId>& internal) {
  std::map<EdgeEnd, EdgeEnd> partner;
  for (const auto& [a, b] : through) {
    partner[a] = b;
    partner[b] = a;
  }
  std::set<EdgeId> touched;
  for (const auto& [s, t] : partner) touched.insert(orig.node(s.node).slots[s.slot]);
  std::set<EdgeId> visited;
  auto walk = [&](EdgeId e, int end, bool& closed) {
    EdgeId cur = e;
    int cend = end;
    closed = false;
    for (;;) {
      visited.insert(cur);
      EdgeEnd x = orig.edge(cur).ends[cend];
      if (!gone.count(x.node)) return x;
      auto it = partner.find(x);
      if (it == partner.end()) throw std::logic_error("bypass: unpaired slot");
      EdgeEnd y = it->second;
      EdgeId next = orig.node(y.node).slots[y.slot];
      int j = orig.end_at(y.node, y.slot);
      if (next == e && j == 1 - end) {
        closed = true;
        return x;
      }
      cur = next;
      cend = 1 - j;
    }
  };
  struct Joined {
    Spin spin;
    bool loop;
    EdgeEnd a, b;
  };
  std::vector<Joined> joined;
  for (EdgeId e : touched) {
    if (visited.count(e)) continue;
    bool closed = false;
    EdgeEnd a = walk(e, 0, closed);
    if (closed) {
      joined.push_back({orig.edge(e).spin, true, {}, {}});
      continue;
    }
    EdgeEnd b = walk(e, 1, closed);
    joined.push_back({orig.edge(e).spin, false, a, b});
  }
  for (EdgeId e : touched) out.remove_edge(e);
  for (EdgeId e : internal) {
    if (out.has_edge(e)) out.remove_edge(e);
  }
  for (NodeId n : gone) out.remove_node(n);
  for (const Joined& j : joined) {
    if (j.loop) out.add_loop(j.spin);
    else out.add_edge(j.spin, j.a, j.b);
  }
}

int monogon_slot(const Node& n) {
  if (n.kind != NodeKind::Crossing) return -1;
  for (int a = 0; a < 4; ++a) {
    if (n.slots[a] >= 0 && n.slots[a] == n.slots[(a + 1) % 4]) return a;
  }
  return -1;
}

Diagram curl_add(const Diagram& d, const Move& m) {
  require_dart(d, m.dart);
  const Edge& e = d.edge(m.dart.edge);
  Diagram out = d;
  bool right_kink = m.hand == Handedness::Right;
  int loop_slot = m.left_side ? 3 : 1;
  int exit_slot = m.left_side ? 1 : 3;
  int over = (right_kink != m.left_side) ? 0 : 1;
  NodeId x = out.add_crossing(over);
  if (e.loop) {
    out.remove_edge(e.id);
    out.add_edge(e.spin, {x, 2}, {x, loop_slot});
    out.add_edge(e.spin, {x, exit_slot}, {x, 0});
    return out;
  }
  EdgeEnd a = d.tail(m.dart), b = d.head(m.dart);
  out.remove_edge(e.id);
  out.add_edge(e.spin, a, {x, 0});
  out.add_edge(e.spin, {x, 2}, {x, loop_slot});
  out.add_edge(e.spin, {x, exit_slot}, b);
  return out;
}

Diagram curl_remove(const Diagram& d, const Move& m) {
  if (!d.has_node(m.node)) throw MoveError("no node " + std::to_string(m.node));
  const Node& n = d.node(m.node);
  int a = monogon_slot(n);
  if (a < 0) throw MoveError("node " + std::to_string(m.node) + " is not a kink");
  Diagram out = d;
  bypass(out, d, {{EdgeEnd{n.id, (a + 2) % 4}, EdgeEnd{n.id, (a + 3) % 4}}}, {n.id}, {n.slots[a]});
  return out;
}

// X slots [e2m, e1a, e2a, e1m], Y slots [e2b, e1b, e2m, e1m].
Diagram r2_add(const Diagram& d, const Move& m) {
  require_dart(d, m.dart);
  require_dart(d, m.dart2);
  if (m.dart.edge == m.dart2.edge) throw MoveError("R2 needs two different edges");
  const Edge& e1 = d.edge(m.dart.edge);
  const Edge& e2 = d.edge(m.dart2.edge);
  if (!e1.loop && !e2.loop) {
    auto f = face_of(d, m.dart);
    if (std::find(f.begin(), f.end(), m.dart2) == f.end()) throw MoveError("R2 darts do not share a face");
  }
  Diagram out = d;
  int over = m.first_over ? 1 : 0;
  EdgeEnd f1, t1, f2, t2;
  if (!e1.loop) {
    f1 = d.tail(m.dart);
    t1 = d.head(m.dart);
  }
  if (!e2.loop) {
    f2 = d.tail(m.dart2);
    t2 = d.head(m.dart2);
  }
  out.remove_edge(e1.id);
  out.remove_edge(e2.id);
  NodeId x = out.add_crossing(over), y = out.add_crossing(over);
  if (e1.loop) {
    out.add_edge(e1.spin, {y, 1}, {x, 1});
  } else {
    out.add_edge(e1.spin, f1, {x, 1});
    out.add_edge(e1.spin, {y, 1}, t1);
  }
  out.add_edge(e1.spin, {x, 3}, {y, 3});
  if (e2.loop) {
    out.add_edge(e2.spin, {x, 2}, {y, 0});
  } else {
    out.add_edge(e2.spin, f2, {y, 0});
    out.add_edge(e2.spin, {x, 2}, t2);
  }
  out.add_edge(e2.spin, {y, 2}, {x, 0});
  return out;
}

Diagram r2_remove(const Diagram& d, const Move& m) {
  require_dart(d, m.dart);
  if (d.edge(m.dart.edge).loop) throw MoveError("R2 removal site is a free loop");
  auto f = face_of(d, m.dart);
  if (f.size() != 2) throw MoveError("R2 removal needs a bigon face");
  const Dart& a = f[0];
  const Dart& b = f[1];
  EdgeEnd at = d.tail(a), ah = d.head(a), bt = d.tail(b), bh = d.head(b);
  NodeId p = at.node, q = ah.node;
  if (p == q || d.node(p).kind != NodeKind::Crossing || d.node(q).kind != NodeKind::Crossing || a.edge == b.edge) {
    throw MoveError("bigon is not bounded by two distinct crossings");
  }
  if (is_over(d.node(p), at.slot) != is_over(d.node(q), ah.slot)) {
    throw MoveError("bigon strands alternate over/under; not an R2 site");
  }
  Diagram out = d;
  bypass(out, d,
         {{EdgeEnd{p, (at.slot + 2) % 4}, EdgeEnd{q, (ah.slot + 2) % 4}},
          {EdgeEnd{q, (bt.slot + 2) % 4}, EdgeEnd{p, (bh.slot + 2) % 4}}},
         {p, q}, {a.edge, b.edge});
  return out;
}

Diagram r3(const Diagram& d, const Move& m) {
  require_dart(d, m.dart);
  if (d.edge(m.dart.edge).loop) throw MoveError("R3 site is a free loop");
  auto f = face_of(d, m.dart);
  if (f.size() != 3) throw MoveError("R3 needs a triangular face");
  NodeId P = d.tail(f[0]).node, R = d.tail(f[1]).node, Q = d.tail(f[2]).node;
  if (P == Q || Q == R || P == R) throw MoveError("triangle repeats a node");
  for (NodeId n : {P, Q, R}) {
    if (d.node(n).kind != NodeKind::Crossing) throw MoveError("triangle corner is not a crossing");
  }
  int off_p = d.tail(f[0]).slot - 1, off_r = d.tail(f[1]).slot, off_q = d.tail(f[2]).slot - 3;
  auto at = [&](NodeId n, int off, int idx) { return EdgeEnd{n, mod(off + idx, 4)}; };
  if (d.head(f[0]) != at(R, off_r, 3) || d.head(f[1]) != at(Q, off_q, 2) || d.head(f[2]) != at(P, off_p, 0)) {
    throw std::logic_error("R3 template mismatch");
  }
  auto parity = [&](NodeId n, int off) { return mod(d.node(n).over - off, 2); };
  bool bc = parity(P, off_p) == 0;
  bool ab = parity(Q, off_q) == 0;
  bool ac = parity(R, off_r) == 0;
  if ((ab && bc && !ac) || (!ab && !bc && ac)) throw MoveError("cyclic over-relation; R3 does not apply");
  std::array<EdgeEnd, 6> boundary = {at(Q, off_q, 0), at(Q, off_q, 1), at(R, off_r, 1),
                                     at(R, off_r, 2), at(P, off_p, 2), at(P, off_p, 3)};
  std::array<std::pair<EdgeId, int>, 6> ext;
  for (int i = 0; i < 6; ++i) {
    const EdgeEnd& b = boundary[i];
    ext[i] = {d.node(b.node).slots[b.slot], d.end_at(b.node, b.slot)};
  }
  Spin sa = d.edge(f[1].edge).spin, sb = d.edge(f[2].edge).spin, sc = d.edge(f[0].edge).spin;
  Diagram out = d;
  for (const Dart& t : f) out.remove_edge(t.edge);
  for (NodeId n : {P, Q, R}) out.remove_node(n);
  NodeId p2 = out.add_crossing(bc ? 0 : 1), q2 = out.add_crossing(ab ? 0 : 1), r2 = out.add_crossing(ac ? 0 : 1);
  const std::array<EdgeEnd, 6> target = {EdgeEnd{r2, 0}, EdgeEnd{p2, 0}, EdgeEnd{p2, 1},
                                         EdgeEnd{q2, 2}, EdgeEnd{q2, 3}, EdgeEnd{r2, 3}};
  for (int i = 0; i < 6; ++i) out.attach(ext[i].first, ext[i].second, target[i]);
  out.add_edge(sb, {p2, 2}, {q2, 1});
  out.add_edge(sc, {p2, 3}, {r2, 1});
  out.add_edge(sa, {q2, 0}, {r2, 2});
  return out;
}

std::vector<int> garside_word(int m) {
  std::vector<int> w;
  for (int k = m - 1; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) w.push_back(i);
  }
  return w;
}

Diagram belt_twist(const Diagram& d, const std::vector<NodeId>& cluster_list, NodeId stem_node, int stem_slot,
                   Handedness hand) {
  std::set<NodeId> cluster(cluster_list.begin(), cluster_list.end());
  if (cluster.empty() || !cluster.count(stem_node)) throw MoveError("stem vertex must belong to the cluster");
  for (NodeId v : cluster) {
    if (!d.has_node(v) || d.node(v).kind != NodeKind::Vertex) throw MoveError("cluster member is not a vertex");
  }
  std::set<EdgeId> internal;
  for (NodeId v : cluster) {
    for (EdgeId e : d.node(v).slots) {
      const Edge& ed = d.edge(e);
      if (cluster.count(ed.ends[0].node) && cluster.count(ed.ends[1].node)) internal.insert(e);
    }
  }
  if (internal.size() + 1 != cluster.size()) throw MoveError("cluster is not a tree");
  {
    std::set<NodeId> reached{stem_node};
    std::deque<NodeId> queue{stem_node};
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      for (EdgeId e : d.node(v).slots) {
        if (!internal.count(e)) continue;
        const Edge& ed = d.edge(e);
        for (const EdgeEnd& x : ed.ends) {
          if (reached.insert(x.node).second) queue.push_back(x.node);
        }
      }
    }
    if (reached.size() != cluster.size()) throw MoveError("cluster is not connected");
  }
  if (stem_slot < 0 || stem_slot > 2 || internal.count(d.node(stem_node).slots[stem_slot])) {
    throw MoveError("stem must be an external leg");
  }
  std::vector<EdgeEnd> legs;
  {
    NodeId v = stem_node;
    int k = (stem_slot + 1) % 3;
    std::size_t guard = 0;
    while (!(v == stem_node && k == stem_slot)) {
      if (++guard > 12 * cluster.size()) throw std::logic_error("contour walk does not close");
      EdgeId e = d.node(v).slots[k];
      if (internal.count(e)) {
        EdgeEnd o = d.edge(e).ends[1 - d.end_at(v, k)];
        v = o.node;
        k = (o.slot + 1) % 3;
      } else {
        legs.push_back({v, k});
        k = (k + 1) % 3;
      }
    }
  }
  const int m = static_cast<int>(legs.size());
  if (m != static_cast<int>(cluster.size()) + 1) throw std::logic_error("unexpected leg count");

  struct SlotUse {
    EdgeId edge;
    int end;
  };
  std::map<EdgeEnd, SlotUse> uses;
  for (NodeId v : cluster) {
    for (int k = 0; k < 3; ++k) uses[{v, k}] = {d.node(v).slots[k], d.end_at(v, k)};
  }
  auto mirror = [](const EdgeEnd& x) { return EdgeEnd{x.node, (3 - x.slot) % 3}; };
  Diagram out = d;
  for (const auto& [at, u] : uses) out.detach(u.edge, u.end);
  for (NodeId v : cluster) {
    out.set_orientation(v, d.node(v).orient == VertexOrientation::Plus ? VertexOrientation::Minus
                                                                      : VertexOrientation::Plus);
  }
  std::set<EdgeEnd> leg_set(legs.begin(), legs.end());
  for (const auto& [at, u] : uses) {
    if (!leg_set.count(at)) out.attach(u.edge, u.end, mirror(at));
  }
  std::vector<EdgeEnd> pending(m);
  std::vector<Spin> spin(m);
  for (int q = 0; q < m; ++q) {
    pending[q] = mirror(legs[q]);
    spin[q] = d.edge(uses.at(legs[q]).edge).spin;
  }
  int over = hand == Handedness::Right ? 1 : 0;
  for (int g : garside_word(m)) {
    int i = g - 1;
    NodeId x = out.add_crossing(over);
    out.add_edge(spin[i], pending[i], {x, 0});
    out.add_edge(spin[i + 1], pending[i + 1], {x, 1});
    pending[i] = {x, 3};
    pending[i + 1] = {x, 2};
    std::swap(spin[i], spin[i + 1]);
  }
  for (int q = 0; q < m; ++q) {
    const SlotUse& u = uses.at(legs[m - 1 - q]);
    if (spin[q] != d.edge(u.edge).spin) throw std::logic_error("belt twist strand mismatch");
    out.attach(u.edge, u.end, pending[q]);
  }
  return out;
}

Diagram rung_insert(const Diagram& d, const Move& m) {
  require_dart(d, m.dart);
  require_dart(d, m.dart2);
  if (m.dart.edge == m.dart2.edge) throw MoveError("rung needs two different edges");
  const Edge& e1 = d.edge(m.dart.edge);
  const Edge& e2 = d.edge(m.dart2.edge);
  if (e1.loop || e2.loop) throw MoveError("rung endpoints must not be free loops");
  auto f = face_of(d, m.dart);
  if (std::find(f.begin(), f.end(), m.dart2) == f.end()) throw MoveError("rung darts do not share a face");
  if (!admissible(e1.spin.twice_j, e1.spin.twice_j, m.spin.twice_j) ||
      !admissible(e2.spin.twice_j, e2.spin.twice_j, m.spin.twice_j)) {
    throw MoveError("rung spin is not admissible");
  }
  EdgeEnd t1 = d.tail(m.dart), h1 = d.head(m.dart), t2 = d.tail(m.dart2), h2 = d.head(m.dart2);
  Diagram out = d;
  out.remove_edge(e1.id);
  out.remove_edge(e2.id);
  NodeId a = out.add_vertex(), b = out.add_vertex();
  // vertex slots: forward, back, rung
  out.add_edge(e1.spin, t1, {a, 1});
  out.add_edge(e1.spin, {a, 0}, h1);
  out.add_edge(e2.spin, t2, {b, 1});
  out.add_edge(e2.spin, {b, 0}, h2);
  out.add_edge(m.spin, {a, 2}, {b, 2});
  return out;
}

void tree_clusters(const Diagram& d, int max_size, std::vector<std::vector<NodeId>>& out) {
  std::set<std::vector<NodeId>> seen;
  std::vector<std::vector<NodeId>> frontier;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind == NodeKind::Vertex) frontier.push_back({id});
  }
  for (int size = 1; size <= max_size && !frontier.empty(); ++size) {
    std::vector<std::vector<NodeId>> next;
    for (auto& c : frontier) {
      std::sort(c.begin(), c.end());
      if (!seen.insert(c).second) continue;
      std::set<NodeId> cs(c.begin(), c.end());
      int internal = 0;
      bool tadpole = false;
      for (const auto& [id, e] : d.edges()) {
        if (e.loop) continue;
        if (cs.count(e.ends[0].node) && cs.count(e.ends[1].node)) {
          ++internal;
          if (e.ends[0].node == e.ends[1].node) tadpole = true;
        }
      }
      if (tadpole || internal + 1 != static_cast<int>(c.size())) continue;
      out.push_back(c);
      for (NodeId v : c) {
        for (EdgeId e : d.node(v).slots) {
          const Edge& ed = d.edge(e);
          for (const EdgeEnd& x : ed.ends) {
            if (!cs.count(x.node) && d.node(x.node).kind == NodeKind::Vertex) {
              auto grown = c;
              grown.push_back(x.node);
              next.push_back(grown);
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

std::string to_string(MoveKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kKindNames) {
    if (name == s) return kind;
  }
  throw std::invalid_argument("unknown move \"" + s + "\"");
}

std::string describe(const Move& m) {
  std::ostringstream os;
  os << to_string(m.kind);
  auto dart = [&](const Dart& x) { os << " e" << x.edge << (x.end ? "<" : ">"); };
  auto hand = [&]() { os << (m.hand == Handedness::Right ? " right" : " left"); };
  switch (m.kind) {
    case MoveKind::CurlAdd:
      dart(m.dart);
      hand();
      if (m.left_side) os << " left-side";
      break;
    case MoveKind::CurlRemove:
      os << " n" << m.node;
      break;
    case MoveKind::R2Add:
      dart(m.dart);
      dart(m.dart2);
      os << (m.first_over ? " first-over" : " first-under");
      break;
    case MoveKind::R2Remove:
    case MoveKind::R3:
      dart(m.dart);
      break;
    case MoveKind::VertexTwist:
      os << " n" << m.node << " leg " << m.slot;
      hand();
      break;
    case MoveKind::BeltTwist:
      os << " {";
      for (std::size_t i = 0; i < m.cluster.size(); ++i) os << (i ? "," : "") << m.cluster[i];
      os << "} stem n" << m.node << "/" << m.slot;
      hand();
      break;
    case MoveKind::RungInsert:
      dart(m.dart);
      dart(m.dart2);
      os << " spin " << m.spin.to_string();
      break;
    case MoveKind::Flip:
      break;
  }
  return os.str();
}

int curl_sign(const Diagram& d, NodeId crossing) {
  const Node& n = d.node(crossing);
  int a = monogon_slot(n);
  if (a < 0) throw MoveError("node " + std::to_string(crossing) + " is not a kink");
  // first pass leaves through a, second through a + 3
  int first_out = a, second_out = (a + 3) % 4;
  bool first_over = is_over(n, first_out);
  int over_out = first_over ? first_out : second_out;
  int under_out = first_over ? second_out : first_out;
  return under_out == (over_out + 1) % 4 ? 1 : -1;
}

Diagram apply_move(const Diagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::CurlAdd:
      return curl_add(d, m);
    case MoveKind::CurlRemove:
      return curl_remove(d, m);
    case MoveKind::R2Add:
      return r2_add(d, m);
    case MoveKind::R2Remove:
      return r2_remove(d, m);
    case MoveKind::R3:
      return r3(d, m);
    case MoveKind::VertexTwist:
      if (!d.has_node(m.node)) throw MoveError("no node " + std::to_string(m.node));
      return belt_twist(d, {m.node}, m.node, m.slot, m.hand);
    case MoveKind::BeltTwist:
      return belt_twist(d, m.cluster, m.node, m.slot, m.hand);
    case MoveKind::RungInsert:
      return rung_insert(d, m);
    case MoveKind::Flip:
      return flip(d);
  }
  throw std::logic_error("unknown move kind");
}

std::vector<Move> enumerate_sites(const Diagram& d, MoveKind kind, int max_cluster, int max_rung) {
  std::vector<Move> out;
  const Handedness hands[] = {Handedness::Right, Handedness::Left};
  switch (kind) {
    case MoveKind::CurlAdd:
      for (const auto& [id, e] : d.edges()) {
        for (int end = 0; end < (e.loop ? 1 : 2); ++end) {
          for (Handedness h : hands) {
            Move m;
            m.kind = kind;
            m.dart = {id, end};
            m.hand = h;
            out.push_back(m);
          }
        }
      }
      break;
    case MoveKind::CurlRemove:
      for (const auto& [id, n] : d.nodes()) {
        if (monogon_slot(n) >= 0) {
          Move m;
          m.kind = kind;
          m.node = id;
          out.push_back(m);
        }
      }
      break;
    case MoveKind::R2Add:
    case MoveKind::RungInsert:
      for (const auto& f : faces(d)) {
        for (std::size_t i = 0; i < f.size(); ++i) {
          for (std::size_t j = 0; j < f.size(); ++j) {
            if (i == j || f[i].edge == f[j].edge) continue;
            if (kind == MoveKind::R2Add) {
              for (bool first_over : {true, false}) {
                Move m;
                m.kind = kind;
                m.dart = f[i];
                m.dart2 = f[j];
                m.first_over = first_over;
                out.push_back(m);
              }
            } else if (i < j) {
              int a = d.edge(f[i].edge).spin.twice_j, b = d.edge(f[j].edge).spin.twice_j;
              for (int r = 2; r <= max_rung; r += 2) {
                if (!admissible(a, a, r) || !admissible(b, b, r)) continue;
                Move m;
                m.kind = kind;
                m.dart = f[i];
                m.dart2 = f[j];
                m.spin = Spin(r);
                out.push_back(m);
              }
            }
          }
        }
      }
      break;
    case MoveKind::R2Remove:
    case MoveKind::R3:
      for (const auto& f : faces(d)) {
        if (f.size() != (kind == MoveKind::R2Remove ? 2u : 3u)) continue;
        Move m;
        m.kind = kind;
        m.dart = f[0];
        try {
          apply_move(d, m);
          out.push_back(m);
        } catch (const MoveError&) {
        }
      }
      break;
    case MoveKind::VertexTwist:
      for (const auto& [id, n] : d.nodes()) {
        if (n.kind != NodeKind::Vertex) continue;
        for (int k = 0; k < 3; ++k) {
          for (Handedness h : hands) {
            Move m;
            m.kind = kind;
            m.node = id;
            m.slot = k;
            m.hand = h;
            out.push_back(m);
          }
        }
      }
      break;
    case MoveKind::BeltTwist: {
      std::vector<std::vector<NodeId>> clusters;
      tree_clusters(d, max_cluster, clusters);
      std::set<std::vector<NodeId>> done;
      for (const auto& c : clusters) {
        if (c.size() < 2 || !done.insert(c).second) continue;
        std::set<NodeId> cs(c.begin(), c.end());
        for (NodeId v : c) {
          for (int k = 0; k < 3; ++k) {
            const Edge& e = d.edge(d.node(v).slots[k]);
            if (cs.count(e.ends[0].node) && cs.count(e.ends[1].node)) continue;
            for (Handedness h : hands) {
              Move m;
              m.kind = kind;
              m.cluster = c;
              m.node = v;
              m.slot = k;
              m.hand = h;
              out.push_back(m);
            }
          }
        }
      }
      break;
    }
    case MoveKind::Flip: {
      Move m;
      m.kind = kind;
      out.push_back(m);
      break;
    }
  }
  return out;
}

std::optional<Move> random_site(const Diagram& d, MoveKind kind, std::mt19937_64& rng, int max_cluster,
                                int max_rung) {
  auto sites = enumerate_sites(d, kind, max_cluster, max_rung);
  if (sites.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
  return sites[pick(rng)];
}

}  // namespace spinnet
