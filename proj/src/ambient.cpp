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

#include "spinnet/ambient.hpp"

#include <algorithm>

namespace spinnet {

namespace {

// log(E / K0) to the given order; K0 must be nonzero.
KappaSeries normalized_log(const ExactValue& E, int order) {
  KappaSeries s = expand_kappa(E, std::max(order, 1));
  if (s[0].is_zero()) throw ClassicallyNull("classical value vanishes");
  return log_series(s.scaled(s[0].inverse()));
}

}  // namespace

ExactValue classical_value(const Diagram& d) { return substitute_classical(evaluate(d)); }

RadicalCoefficient v1(const Diagram& d) { return normalized_log(evaluate(d), 1)[1]; }

AmbientResult ambient_from_value(const ExactValue& E, int order) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  AmbientResult r;
  r.E = E;
  KappaSeries s = expand_kappa(E, order);
  RadicalCoefficient k0 = s[0];
  r.K0 = ExactValue(k0);
  if (k0.is_zero()) {
    r.note = "classical value vanishes; P undefined";
    return r;
  }
  KappaSeries log_e = log_series(s.scaled(k0.inverse()));
  r.v1 = log_e[1];
  if (!r.v1->is_rational()) {
    r.note = "v1 is not rational; P is not a monomial quotient";
    return r;
  }
  Rational v = r.v1->rational_value();
  r.P = E / (ExactValue(k0) * ExactValue::q_power(v));
  std::vector<RadicalCoefficient> c = log_e.coefficients();
  c[1] = RadicalCoefficient();
  r.log_P = KappaSeries(order, c);
  for (int i = 2; i <= order; ++i) r.vassiliev[i] = c[i];
  return r;
}

AmbientResult ambient_invariant(const Diagram& d, int order) { return ambient_from_value(evaluate(d), order); }

MoveCheck check_move_invariance(const Diagram& d, const Move& m, int order) {
  MoveCheck c;
  c.move = m;
  AmbientResult before = ambient_invariant(d, order);
  Diagram moved = apply_move(d, m);
  AmbientResult after = ambient_invariant(moved, order);
  if (!before.E.is_zero()) c.e_ratio = after.E / before.E;
  if (!before.P || !after.P) {
    c.detail = before.P ? after.note : before.note;
    return c;
  }
  ExactValue expected = m.kind == MoveKind::Flip ? before.P->conj() : *before.P;
  c.residual = *after.P - expected;
  c.passed = c.residual.is_zero();
  c.detail = describe(m);
  return c;
}

std::vector<MoveCheck> check_move_invariance(const Diagram& d, const std::vector<MoveKind>& kinds, int max_sites,
                                             int order) {
  std::vector<MoveCheck> out;
  for (MoveKind k : kinds) {
    std::vector<Move> sites;
    if (k == MoveKind::Flip) {
      Move m;
      m.kind = MoveKind::Flip;
      sites.push_back(m);
    } else {
      sites = enumerate_sites(d, k, 2, 2);
    }
    if (max_sites > 0 && static_cast<int>(sites.size()) > max_sites) sites.resize(max_sites);
    for (const Move& m : sites) out.push_back(check_move_invariance(d, m, order));
  }
  return out;
}

Json to_json(const AmbientResult& r) {
  Json j;
  j["E"] = to_json(r.E);
  j["K0"] = to_json(r.K0);
  j["v1"] = r.v1 ? Json(r.v1->to_string()) : Json(nullptr);
  j["P"] = r.P ? to_json(*r.P) : Json(nullptr);
  Json v = Json::object();
  for (const auto& [i, c] : r.vassiliev) v[std::to_string(i)] = c.to_string();
  j["vassiliev"] = v;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const MoveCheck& c) {
  Json j;
  j["move"] = describe(c.move);
  j["passed"] = c.passed;
  if (!c.passed) j["residual"] = to_json(c.residual);
  if (c.e_ratio) j["E_ratio"] = c.e_ratio->to_string();
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace spinnet
