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

#include "spinnet/diagram_io.hpp"

#include <map>
#include <set>

namespace spinnet {

namespace {

std::string where(const char* list, std::size_t i, const char* field = nullptr) {
  std::string s = std::string(list) + "[" + std::to_string(i) + "]";
  if (field) s += std::string(".") + field;
  return s;
}

int require_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ParseError(ctx, "expected an integer");
  return j.get<int>();
}

int parse_two_j(const Json& e, const std::string& ctx) {
  auto twice_of = [&](const Rational& r, const std::string& c) {
    Rational t = r * 2;
    if (!is_integer(t)) throw ParseError(c, "twice_j must be integral");
    return static_cast<int>(to_long(t));
  };
  if (e.contains("two_j")) {
    const Json& v = e["two_j"];
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
      Rational r;
      try {
        r = parse_rational(v.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw ParseError(ctx + ".two_j", "not a number");
      }
      if (!is_integer(r)) throw ParseError(ctx + ".two_j", "twice_j must be integral");
      return static_cast<int>(to_long(r));
    }
    throw ParseError(ctx + ".two_j", "twice_j must be integral");
  }
  if (e.contains("spin")) {
    const Json& v = e["spin"];
    if (v.is_number_integer()) return 2 * v.get<int>();
    if (v.is_string()) {
      try {
        return twice_of(parse_rational(v.get<std::string>()), ctx + ".spin");
      } catch (const std::invalid_argument& ex) {
        if (dynamic_cast<const ParseError*>(&ex)) throw;
        throw ParseError(ctx + ".spin", "not a rational");
      }
    }
    throw ParseError(ctx + ".spin", "twice_j must be integral");
  }
  throw ParseError(ctx, "missing two_j");
}

}  // namespace

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("", "diagram must be a JSON object");
  Diagram d;
  std::map<NodeId, Node> nodes;
  if (j.contains("nodes")) {
    if (!j["nodes"].is_array()) throw ParseError("nodes", "expected an array");
    for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
      const Json& n = j["nodes"][i];
      std::string ctx = where("nodes", i);
      if (!n.is_object()) throw ParseError(ctx, "expected an object");
      Node node;
      if (!n.contains("id")) throw ParseError(ctx, "missing id");
      node.id = require_int(n["id"], ctx + ".id");
      if (node.id < 0) throw ParseError(ctx + ".id", "must be non-negative");
      if (nodes.count(node.id)) throw ParseError(ctx + ".id", "duplicate node id " + std::to_string(node.id));
      std::string kind = n.value("kind", std::string("vertex"));
      if (kind == "vertex") {
        node.kind = NodeKind::Vertex;
        std::string o = n.value("orient", std::string("+"));
        if (o != "+" && o != "-") throw ParseError(ctx + ".orient", "expected \"+\" or \"-\"");
        node.orient = o == "+" ? VertexOrientation::Plus : VertexOrientation::Minus;
        node.slots.assign(3, -1);
      } else if (kind == "crossing") {
        node.kind = NodeKind::Crossing;
        if (!n.contains("over")) throw ParseError(ctx, "crossing needs \"over\"");
        const Json& ov = n["over"];
        if (!ov.is_array() || ov.size() != 2) throw ParseError(ctx + ".over", "expected a pair of slots");
        int a = require_int(ov[0], ctx + ".over"), b = require_int(ov[1], ctx + ".over");
        if (std::min(a, b) < 0 || std::max(a, b) > 3 || (a + 2) % 4 != b) {
          throw ParseError(ctx + ".over", "over strand must be a pair of opposite slots");
        }
        node.over = std::min(a, b);
        node.slots.assign(4, -1);
      } else {
        throw ParseError(ctx + ".kind", "unknown node kind \"" + kind + "\"");
      }
      if (n.contains("slots")) {
        const Json& s = n["slots"];
        if (!s.is_array() || static_cast<int>(s.size()) != node.degree()) {
          throw ParseError(ctx + ".slots", "expected " + std::to_string(node.degree()) + " entries");
        }
        for (int k = 0; k < node.degree(); ++k) node.slots[k] = require_int(s[k], ctx + ".slots");
      }
      nodes[node.id] = node;
    }
  }
  std::map<NodeId, std::vector<EdgeId>> derived;
  for (const auto& [id, n] : nodes) derived[id].assign(n.degree(), -1);
  std::set<EdgeId> edge_ids;
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("edges", "expected an array");
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const Json& e = j["edges"][i];
    std::string ctx = where("edges", i);
    if (!e.is_object()) throw ParseError(ctx, "expected an object");
    Edge edge;
    if (!e.contains("id")) throw ParseError(ctx, "missing id");
    edge.id = require_int(e["id"], ctx + ".id");
    if (edge.id < 0) throw ParseError(ctx + ".id", "must be non-negative");
    if (!edge_ids.insert(edge.id).second) throw ParseError(ctx + ".id", "duplicate edge id " + std::to_string(edge.id));
    edge.spin = Spin(parse_two_j(e, ctx));
    if (edge.spin.twice_j < 0) throw ParseError(ctx + ".two_j", "spin must be non-negative");
    const Json& ends = e.contains("ends") ? e["ends"] : Json::array();
    if (!ends.is_array() || (ends.size() != 0 && ends.size() != 2)) {
      throw ParseError(ctx + ".ends", "expected two [node, slot] pairs or [] for a free loop");
    }
    if (ends.empty()) {
      edge.loop = true;
    } else {
      for (int k = 0; k < 2; ++k) {
        const Json& x = ends[k];
        std::string ectx = ctx + ".ends[" + std::to_string(k) + "]";
        if (!x.is_array() || x.size() != 2) throw ParseError(ectx, "expected [node, slot]");
        EdgeEnd end{require_int(x[0], ectx), require_int(x[1], ectx)};
        auto it = derived.find(end.node);
        if (it == derived.end()) throw ParseError(ectx, "unknown node " + std::to_string(end.node));
        if (end.slot < 0 || end.slot >= static_cast<int>(it->second.size())) {
          throw ParseError(ectx, "slot " + std::to_string(end.slot) + " out of range");
        }
        if (it->second[end.slot] != -1) {
          throw ParseError(ectx, "edge " + std::to_string(edge.id) + " reuses end [" + std::to_string(end.node) + "," +
                                     std::to_string(end.slot) + "] already taken by edge " +
                                     std::to_string(it->second[end.slot]));
        }
        it->second[end.slot] = edge.id;
        edge.ends[k] = end;
      }
    }
    d.insert_raw(edge);
  }
  for (auto& [id, n] : nodes) {
    const auto& want = derived.at(id);
    bool given = std::any_of(n.slots.begin(), n.slots.end(), [](EdgeId e) { return e != -1; });
    if (given && n.slots != want) {
      for (int k = 0; k < n.degree(); ++k) {
        if (n.slots[k] != want[k]) {
          throw ParseError("node " + std::to_string(id) + ".slots[" + std::to_string(k) + "]",
                           "lists edge " + std::to_string(n.slots[k]) + " but the edge ends say " +
                               std::to_string(want[k]));
        }
      }
    }
    n.slots = want;
    d.insert_raw(n);
  }
  auto violations = validate(d);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v.message;
    throw ParseError("validation", msg);
  }
  return d;
}

Diagram parse_diagram(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    std::size_t pos = std::min<std::size_t>(ex.byte, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
  return diagram_from_json(j);
}

Json diagram_to_json(const Diagram& d) {
  Json edges = Json::array();
  for (const auto& [id, e] : d.edges()) {
    Json ends = Json::array();
    if (!e.loop) {
      for (const EdgeEnd& x : e.ends) ends.push_back({x.node, x.slot});
    }
    edges.push_back({{"id", id}, {"two_j", e.spin.twice_j}, {"ends", ends}});
  }
  Json nodes = Json::array();
  for (const auto& [id, n] : d.nodes()) {
    Json o = {{"id", id}};
    if (n.kind == NodeKind::Vertex) {
      o["kind"] = "vertex";
      o["orient"] = n.orient == VertexOrientation::Plus ? "+" : "-";
    } else {
      o["kind"] = "crossing";
      o["over"] = {n.over, n.over + 2};
    }
    o["slots"] = n.slots;
    nodes.push_back(o);
  }
  return Json{{"edges", edges}, {"nodes", nodes}};
}

std::string serialize_diagram(const Diagram& d) { return diagram_to_json(d).dump(); }

}  // namespace spinnet
