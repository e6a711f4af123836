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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "spinnet/builtins.hpp"
#include "spinnet/diagram_io.hpp"
#include "spinnet/evaluator.hpp"
#include "spinnet/moves.hpp"

using namespace spinnet;

namespace {

const Spin kHalf(1), kOne(2), kThreeHalves(3);

std::vector<Diagram> knotted() {
  return {curl(kHalf, Handedness::Left),
          trefoil(kHalf),
          figure8(kHalf),
          hopf(kHalf, kOne),
          braid_closure(3, {1, -2, 1}, kHalf),
          braid_closure(2, {1, 1, 1}, kOne),
          tetrahedron(kHalf, kHalf, kHalf, kHalf, kOne, kOne)};
}

Handedness other(Handedness h) { return h == Handedness::Right ? Handedness::Left : Handedness::Right; }

// A few random sites of one kind, deterministic per seed.
std::vector<Move> sample_sites(const Diagram& d, MoveKind k, std::size_t n, std::uint64_t seed) {
  auto all = enumerate_sites(d, k, 2, 2);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > n) all.resize(n);
  return all;
}

ExactValue flip_sign(const Diagram& d) {
  int s = 1;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind == NodeKind::Vertex) s *= vertex_reversal_sign(d.triple(id));
  }
  return ExactValue(s);
}

}  // namespace

TEST(Evaluator, LoopValue) {
  for (int tj = 0; tj <= 6; ++tj) EXPECT_EQ(evaluate(unknot(Spin(tj))), delta(Spin(tj))) << tj;
  EXPECT_EQ(evaluate(unlink(kHalf, kThreeHalves)), delta(kHalf) * delta(kThreeHalves));
}

TEST(Evaluator, ThetaValue) {
  ExactValue expected = ExactValue::quantum_integer_power(2, 1) * ExactValue::quantum_integer_power(3, Rational(1, 2));
  EXPECT_EQ(evaluate(theta(kHalf, kHalf, kOne)), expected);
  EXPECT_EQ(evaluate(theta(kOne, kOne, kOne)), ExactValue::quantum_integer_power(3, Rational(3, 2)));
}

TEST(Evaluator, TetAgreesWithClosedForm) {
  int checked = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int j = 0; j <= 4; ++j)
            for (int l = 0; l <= 4; ++l) {
              if (!admissible(a, b, j) || !admissible(c, d, j) || !admissible(a, d, l) || !admissible(b, c, l)) continue;
              Spin s[] = {Spin(a), Spin(b), Spin(c), Spin(d), Spin(j), Spin(l)};
              ASSERT_EQ(evaluate(tetrahedron(s[0], s[1], s[2], s[3], s[4], s[5])), tet(s[0], s[1], s[2], s[3], s[4], s[5]))
                  << a << b << c << d << j << l;
              ++checked;
            }
  EXPECT_GT(checked, 100);
}

TEST(Evaluator, ResolveTermCounts) {
  auto u = resolve_crossings(unknot(kOne));
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0].weight, ExactValue(1));
  EXPECT_EQ(resolve_crossings(curl(kHalf, Handedness::Right)).size(), 2u);
  EXPECT_EQ(resolve_crossings(trefoil(kHalf)).size(), 8u);
  EXPECT_EQ(resolved_term_count(figure8(kOne)), 81u);
  for (const auto& t : resolve_crossings(hopf(kHalf, kOne))) {
    EXPECT_TRUE(t.diagram.crossing_free());
    EXPECT_FALSE(t.weight.is_zero());
    EXPECT_TRUE(validate(t.diagram).empty());
  }
}

TEST(Evaluator, ResolvedSumMatchesEvaluate) {
  for (const Diagram& d : {trefoil(kHalf), hopf(kHalf, kOne), figure8(kHalf)}) {
    ExactValue sum;
    for (const auto& t : resolve_crossings(d)) sum += t.weight * reduce_planar(t.diagram);
    EXPECT_EQ(sum, evaluate(d));
  }
}

TEST(Evaluator, CurlPhases) {
  for (int tj = 1; tj <= 4; ++tj) {
    Spin j(tj);
    EXPECT_EQ(evaluate(curl(j, Handedness::Right)), curl_phase(j, Handedness::Right) * delta(j));
    EXPECT_EQ(evaluate(curl(j, Handedness::Left)), curl_phase(j, Handedness::Left) * delta(j));
  }
  EXPECT_EQ(curl_phase(kHalf, Handedness::Right), ExactValue::q_power(Rational(-3, 4)));
}

TEST(Evaluator, ReidemeisterOne) {
  std::uint64_t seed = 1;
  for (const Diagram& d : knotted()) {
    ExactValue e = evaluate(d);
    for (const Move& m : sample_sites(d, MoveKind::CurlAdd, 4, seed++)) {
      Spin j = d.edge(m.dart.edge).spin;
      EXPECT_EQ(evaluate(apply_move(d, m)), curl_phase(j, m.hand) * e) << describe(m);
    }
  }
}

TEST(Evaluator, ReidemeisterTwoAndThree) {
  std::uint64_t seed = 7;
  int r3 = 0;
  for (const Diagram& d : knotted()) {
    ExactValue e = evaluate(d);
    for (const Move& m : sample_sites(d, MoveKind::R2Add, 3, seed++)) {
      Diagram pushed = apply_move(d, m);
      EXPECT_EQ(evaluate(pushed), e) << describe(m);
      for (const Move& m3 : sample_sites(pushed, MoveKind::R3, 2, seed++)) {
        EXPECT_EQ(evaluate(apply_move(pushed, m3)), e) << describe(m) << " then " << describe(m3);
        ++r3;
      }
    }
  }
  Diagram b = braid_closure(3, {1, 2, 1, -2}, kThreeHalves);
  ExactValue e = evaluate(b);
  for (const Move& m : enumerate_sites(b, MoveKind::R3)) {
    EXPECT_EQ(evaluate(apply_move(b, m)), e) << describe(m);
    ++r3;
  }
  EXPECT_GT(r3, 0);
}

TEST(Evaluator, MixedSpinReidemeister) {
  // spins 1/2 and 1 meeting at crossings, through a vertex
  Diagram d = theta(kHalf, kOne, kThreeHalves);
  auto sites = enumerate_sites(d, MoveKind::R2Add);
  ASSERT_FALSE(sites.empty());
  ExactValue e = evaluate(d);
  for (const Move& s : sites) EXPECT_EQ(evaluate(apply_move(d, s)), e) << describe(s);
}

TEST(Evaluator, VertexTwistFactor) {
  for (const Diagram& d : {theta(kHalf, kOne, kThreeHalves), theta(kOne, kOne, kOne),
                           tetrahedron(kHalf, kHalf, kHalf, kHalf, kOne, kOne)}) {
    ExactValue e = evaluate(d);
    for (const Move& m : enumerate_sites(d, MoveKind::VertexTwist)) {
      SpinTriple t = d.triple(m.node);
      Spin legs[] = {t.a, t.b, t.c};
      ExactValue phase = vertex_twist_phase({legs[(m.slot + 1) % 3], legs[(m.slot + 2) % 3], legs[m.slot]});
      if (m.hand == Handedness::Right) phase = phase.inverse();
      Diagram twisted = apply_move(d, m);
      EXPECT_EQ(evaluate(twisted), phase * e) << describe(m);
      // the twisted vertex carries the reversed orientation and obeys the same law
      Move again = m;
      again.slot = (3 - m.slot) % 3;
      again.hand = other(m.hand);
      EXPECT_EQ(evaluate(apply_move(twisted, again)), e) << describe(m);
    }
  }
}

TEST(Evaluator, BeltTwistIsProductOfVertexTwists) {
  // each cluster vertex contributes its own twist, taken across the leg pointing at the stem
  auto predicted = [](const Diagram& d, const Move& m) {
    std::map<NodeId, int> toward{{m.node, m.slot}};
    std::set<NodeId> cluster(m.cluster.begin(), m.cluster.end());
    std::vector<NodeId> queue{m.node};
    while (!queue.empty()) {
      NodeId v = queue.back();
      queue.pop_back();
      for (int k = 0; k < 3; ++k) {
        const Edge& e = d.edge(d.node(v).slots[k]);
        EdgeEnd o = e.ends[e.ends[0] == EdgeEnd{v, k} ? 1 : 0];
        if (cluster.count(o.node) && toward.emplace(o.node, o.slot).second) queue.push_back(o.node);
      }
    }
    ExactValue p(1);
    for (const auto& [v, s] : toward) {
      SpinTriple t = d.triple(v);
      Spin legs[] = {t.a, t.b, t.c};
      ExactValue f = vertex_twist_phase({legs[(s + 1) % 3], legs[(s + 2) % 3], legs[s]});
      p *= m.hand == Handedness::Right ? f.inverse() : f;
    }
    return p;
  };
  int checked = 0;
  for (const Diagram& d : {tetrahedron(kHalf, kHalf, kHalf, kHalf, kOne, kOne), tetrahedron(kOne, kOne, kOne, kOne, kOne, kOne)}) {
    ExactValue e = evaluate(d);
    for (const Move& m : enumerate_sites(d, MoveKind::BeltTwist, 3)) {
      Diagram twisted = apply_move(d, m);
      EXPECT_EQ(evaluate(twisted), predicted(d, m) * e) << describe(m);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Evaluator, FlipLaw) {
  for (const Diagram& d : knotted()) {
    EXPECT_EQ(evaluate(flip(d)), evaluate(d).conj() * flip_sign(d));
  }
  Diagram t = theta(kHalf, kHalf, kOne);
  EXPECT_EQ(evaluate(flip(t)), evaluate(t));
}

TEST(Evaluator, FigureEightIsAmphichiral) {
  EXPECT_EQ(evaluate(figure8(kHalf)), evaluate(flip(figure8(kHalf))));
  EXPECT_NE(evaluate(trefoil(kHalf)), evaluate(flip(trefoil(kHalf))));
}

TEST(Evaluator, DisjointUnion) {
  auto ds = knotted();
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
    EXPECT_EQ(evaluate(disjoint_union(ds[i], ds[i + 1])), evaluate(ds[i]) * evaluate(ds[i + 1]));
  }
}

TEST(Evaluator, ExactAgreesWithNumeric) {
  std::vector<Diagram> corpus = knotted();
  corpus.push_back(trefoil(kThreeHalves));
  corpus.push_back(theta(kOne, kThreeHalves, kHalf));
  corpus.push_back(unknot(Spin(4)));
  for (const Diagram& d : corpus) {
    Complex a = evaluate_numeric(evaluate(d), 20);
    Complex b = evaluate(d, NumericMode{20});
    EXPECT_LE(std::abs(a - b), 1e-10L) << serialize_diagram(d);
  }
}

TEST(Evaluator, ConfluenceUnderRandomFaceOrder) {
  std::mt19937_64 rng(3);
  std::vector<Diagram> planar;
  for (const Diagram& d : knotted()) {
    auto terms = resolve_crossings(d);
    for (std::size_t i = 0; i < terms.size() && i < 3; ++i) planar.push_back(terms[i].diagram);
  }
  Diagram t = tetrahedron(kOne, kOne, kOne, kOne, kOne, kOne);
  for (int i = 0; i < 4; ++i) {
    auto m = random_site(t, MoveKind::RungInsert, rng, 2, 3);
    ASSERT_TRUE(m);
    Diagram r = apply_move(t, *m);
    if (r.vertex_count() <= 8) planar.push_back(r);
  }
  for (const Diagram& d : planar) {
    if (d.vertex_count() > 8) continue;
    ExactValue reference = reduce_planar(d);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      ReduceOptions opts;
      opts.strategy = FaceStrategy::Random;
      opts.seed = seed;
      opts.memo = false;
      EXPECT_EQ(reduce_planar(d, opts), reference) << seed;
    }
  }
}

TEST(Evaluator, ThreadsDoNotChangeTheValue) {
  EvaluateOptions opts;
  opts.threads = 3;
  Diagram d = figure8(kOne);
  ExactValue serial = evaluate(d);
  clear_planar_memo();
  EXPECT_EQ(evaluate(d, opts), serial);
  Complex a = evaluate(d, NumericMode{12});
  EXPECT_LE(std::abs(evaluate(d, NumericMode{12}, opts) - a), 1e-12L);
}

TEST(Evaluator, TraceRecordsIdentities) {
  std::vector<TraceStep> trace;
  Diagram d = tetrahedron(kHalf, kHalf, kHalf, kHalf, kOne, kOne);
  EXPECT_EQ(reduce_planar_traced(d, trace), evaluate(d));
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace.front().rule, "recouple");
  Json j = trace_to_json(trace);
  ASSERT_EQ(j.size(), trace.size());
  EXPECT_EQ(j[0].at("rule"), "recouple");
  for (const auto& s : trace) {
    EXPECT_TRUE(s.rule == "sign" || s.rule == "zero-edge" || s.rule == "loop" || s.rule == "bubble" ||
                s.rule == "cut" || s.rule == "recouple")
        << s.rule;
  }
}

TEST(Evaluator, Errors) {
  EXPECT_THROW(reduce_planar(trefoil(kHalf)), std::invalid_argument);
  EXPECT_THROW(evaluate(theta(kHalf, kHalf, kHalf)), std::invalid_argument);
}

TEST(Evaluator, MemoIsUsed) {
  clear_planar_memo();
  evaluate(figure8(kHalf));
  auto s = planar_memo_stats();
  EXPECT_GT(s.entries, 0u);
  evaluate(figure8(kHalf));
  EXPECT_GT(planar_memo_stats().hits, s.hits);
}
