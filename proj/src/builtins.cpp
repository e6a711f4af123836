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

#include "spinnet/builtins.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace spinnet {

Spin parse_spin(std::string_view text) {
  Rational r = parse_rational(text);
  Rational t = r * 2;
  if (!is_integer(t) || t < 0) throw std::invalid_argument("not a spin: " + std::string(text));
  return Spin(static_cast<int>(to_long(t)));
}

Diagram unknot(Spin j) {
  Diagram d;
  d.add_loop(j);
  return d;
}

Diagram curl(Spin j, Handedness h) {
  Diagram d;
  NodeId x = d.add_crossing(h == Handedness::Right ? 0 : 1);
  d.add_edge(j, {x, 2}, {x, 1});
  d.add_edge(j, {x, 3}, {x, 0});
  return d;
}

Diagram unlink(Spin j1, Spin j2) {
  Diagram d;
  d.add_loop(j1);
  d.add_loop(j2);
  return d;
}

Diagram theta(Spin a, Spin b, Spin c) {
  Diagram d;
  NodeId u = d.add_vertex(), w = d.add_vertex();
  d.add_edge(a, {u, 0}, {w, 0});
  d.add_edge(b, {u, 1}, {w, 2});
  d.add_edge(c, {u, 2}, {w, 1});
  return d;
}

Diagram tetrahedron(Spin j1, Spin j2, Spin j3, Spin j4, Spin j, Spin l) {
  Diagram d;
  // A outer top, B lower left, C lower right, D inside
  NodeId A = d.add_vertex(), B = d.add_vertex(), C = d.add_vertex(), D = d.add_vertex();
  d.add_edge(j, {A, 0}, {B, 2});
  d.add_edge(j2, {A, 1}, {D, 0});
  d.add_edge(j1, {A, 2}, {C, 0});
  d.add_edge(j4, {B, 0}, {C, 2});
  d.add_edge(j3, {B, 1}, {D, 1});
  d.add_edge(l, {C, 1}, {D, 2});
  return d;
}

Diagram from_pd(const std::vector<std::array<int, 4>>& pd, Spin j) {
  Diagram d;
  std::map<int, std::vector<EdgeEnd>> where;
  for (const auto& x : pd) {
    NodeId n = d.add_crossing(1);
    for (int k = 0; k < 4; ++k) where[x[k]].push_back(EdgeEnd{n, k});
  }
  for (const auto& [label, ends] : where) {
    if (ends.size() != 2) throw std::invalid_argument("PD label " + std::to_string(label) + " must occur twice");
    d.add_edge(j, ends[0], ends[1]);
  }
  return d;
}

Diagram trefoil(Spin j) { return from_pd({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, j); }

Diagram figure8(Spin j) { return from_pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, j); }

Diagram hopf(Spin j1, Spin j2) {
  Diagram d = from_pd({{4, 1, 3, 2}, {2, 3, 1, 4}}, j1);
  set_component_spins(d, {j1, j2});
  return d;
}

// Crossing slots: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left.
Diagram braid_closure(int strands, const std::vector<int>& word, Spin j) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  Diagram d;
  std::vector<std::optional<EdgeEnd>> first(strands), pending(strands);
  auto connect = [&](int pos, EdgeEnd in) {
    if (!pending[pos]) {
      first[pos] = in;
    } else {
      d.add_edge(j, *pending[pos], in);
    }
  };
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw std::invalid_argument("braid generator out of range");
    NodeId x = d.add_crossing(g > 0 ? 0 : 1);
    connect(i, {x, 0});
    connect(i + 1, {x, 1});
    pending[i] = EdgeEnd{x, 3};
    pending[i + 1] = EdgeEnd{x, 2};
  }
  for (int p = 0; p < strands; ++p) {
    if (!pending[p]) {
      d.add_loop(j);
    } else {
      d.add_edge(j, *pending[p], *first[p]);
    }
  }
  return d;
}

void set_component_spins(Diagram& d, const std::vector<Spin>& spins) {
  auto comps = link_components(d);
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end()); });
  if (comps.size() != spins.size()) throw std::invalid_argument("component count does not match spin count");
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (EdgeId e : comps[c]) d.set_spin(e, spins[c]);
  }
}

namespace {

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> named;

  Spin spin(const std::string& key, std::size_t pos, std::optional<Spin> fallback = std::nullopt) const {
    auto it = named.find(key);
    if (it != named.end()) return parse_spin(it->second);
    if (pos < positional.size()) return parse_spin(positional[pos]);
    if (fallback) return *fallback;
    throw std::invalid_argument("missing parameter " + key);
  }
};

Args parse_args(std::string_view text) {
  Args a;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) a.positional.push_back(item);
    else a.named[item.substr(0, eq)] = item.substr(eq + 1);
    start = end + 1;
    if (end == text.size()) break;
  }
  return a;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"unknot", "curl", "unlink", "theta", "tet", "trefoil", "figure8", "hopf"};
}

Diagram builtin(std::string_view spec) {
  std::size_t colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  Args a = parse_args(colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1));
  const Spin half(1);
  if (name == "unknot") return unknot(a.spin("j", 0, half));
  if (name == "curl") {
    std::string hand = a.named.count("hand") ? a.named.at("hand") : (a.positional.size() > 1 ? a.positional[1] : "right");
    if (hand != "right" && hand != "left" && hand != "+" && hand != "-") {
      throw std::invalid_argument("curl hand must be right or left");
    }
    return curl(a.spin("j", 0, half), hand == "right" || hand == "+" ? Handedness::Right : Handedness::Left);
  }
  if (name == "unlink") return unlink(a.spin("j1", 0, half), a.spin("j2", 1, half));
  if (name == "theta") return theta(a.spin("a", 0), a.spin("b", 1), a.spin("c", 2));
  if (name == "tet") {
    return tetrahedron(a.spin("j1", 0), a.spin("j2", 1), a.spin("j3", 2), a.spin("j4", 3), a.spin("j", 4),
                       a.spin("l", 5));
  }
  if (name == "trefoil") return trefoil(a.spin("j", 0, half));
  if (name == "figure8") return figure8(a.spin("j", 0, half));
  if (name == "hopf") return hopf(a.spin("j1", 0, half), a.spin("j2", 1, a.spin("j1", 0, half)));
  throw std::invalid_argument("unknown builtin \"" + name + "\"");
}

}  // namespace spinnet
