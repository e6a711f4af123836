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

#include <algorithm>
#include <random>

#include "bracket.hpp"
#include "bridge.hpp"
#include "corpus.hpp"
#include "spinnet/builtins.hpp"
#include "spinnet/evaluator.hpp"

using namespace spinnet;
using namespace spinnet::oracle;

namespace {

const Spin kHalf(1);

APoly poly(std::initializer_list<std::pair<int, long>> terms) {
  APoly p;
  for (auto [e, c] : terms) p += APoly::monomial(e, c);
  return p;
}

}  // namespace

TEST(Bracket, KnownValues) {
  EXPECT_EQ(bracket(unknot(kHalf)), loop_value());
  EXPECT_EQ(bracket(hopf(kHalf, kHalf)), poly({{6, 1}, {2, 1}, {-2, 1}, {-6, 1}}));
  EXPECT_EQ(bracket(trefoil(kHalf)), poly({{7, 1}, {3, 1}, {-1, 1}, {-9, -1}}));
  EXPECT_EQ(bracket(figure8(kHalf)), poly({{10, -1}, {-10, -1}}));
  EXPECT_EQ(bracket(unlink(kHalf, kHalf)), loop_value() * loop_value());
}

TEST(Bracket, CurlFactor) {
  // a curl multiplies the bracket by -A^{+-3}
  APoly r = bracket(curl(kHalf, Handedness::Right)), l = bracket(curl(kHalf, Handedness::Left));
  APoly d = loop_value();
  EXPECT_TRUE(r == APoly::monomial(3, -1) * d || r == APoly::monomial(-3, -1) * d);
  EXPECT_EQ(r * l, APoly::monomial(0) * d * d);
}

TEST(Bracket, StateSumMatchesRecursion) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    int strands = 2 + i % 3;
    std::vector<int> word;
    int len = 1 + static_cast<int>(rng() % 7);
    for (int k = 0; k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back(rng() % 2 ? g : -g);
    }
    Diagram d = braid_closure(strands, word, kHalf);
    EXPECT_EQ(bracket(d), bracket_recursive(d)) << i;
  }
}

TEST(Bracket, MirrorInvertsA) {
  for (const Diagram& d : {trefoil(kHalf), hopf(kHalf, kHalf), braid_closure(3, {1, 1, -2, 1}, kHalf)}) {
    APoly mirrored;
    for (const auto& [e, c] : bracket(d).terms()) mirrored += APoly::monomial(-e, c);
    EXPECT_EQ(bracket(flip(d)), mirrored);
  }
}

TEST(Bracket, InvariantUnderR2AndR3) {
  std::mt19937_64 rng(5);
  for (const Diagram& d : {trefoil(kHalf), figure8(kHalf), hopf(kHalf, kHalf)}) {
    APoly b = bracket(d);
    for (MoveKind k : {MoveKind::R2Add, MoveKind::R3}) {
      for (const Move& m : enumerate_sites(d, k)) EXPECT_EQ(bracket(apply_move(d, m)), b) << describe(m);
    }
    Diagram pushed = apply_move(d, *random_site(d, MoveKind::R2Add, rng));
    for (const Move& m : enumerate_sites(pushed, MoveKind::R3)) EXPECT_EQ(bracket(apply_move(pushed, m)), b);
  }
}

TEST(Bracket, RejectsOtherSpins) {
  EXPECT_THROW(bracket(unknot(Spin(2))), std::invalid_argument);
  EXPECT_THROW(bracket(theta(kHalf, kHalf, Spin(2))), std::invalid_argument);
  EXPECT_THROW(bracket_recursive(trefoil(Spin(2))), std::invalid_argument);
}

TEST(Bridge, FitContainsFrozenMap) {
  auto fits = fit_bridge(bridge_training_set());
  ASSERT_FALSE(fits.empty());
  EXPECT_NE(std::find(fits.begin(), fits.end(), kFrozenBridge), fits.end());
}

TEST(Bridge, AllFittedMapsAgreeOnHeldOut) {
  std::vector<Diagram> held = {trefoil(kHalf), flip(trefoil(kHalf)), figure8(kHalf),
                               braid_closure(3, {1, -2, 1, 1}, kHalf), unlink(kHalf, kHalf)};
  for (const BridgeMap& m : fit_bridge(bridge_training_set())) {
    for (const Diagram& d : held) EXPECT_EQ(bridged_bracket(d, m), bridged_bracket(d)) << m.to_string();
  }
}

TEST(Bridge, MatchesEvaluatorOnHeldOutKnots) {
  for (const Diagram& d : {trefoil(kHalf), flip(trefoil(kHalf)), figure8(kHalf), braid_closure(2, {1, 1, 1, 1, 1}, kHalf),
                           braid_closure(3, {1, -2, 1, -2}, kHalf)}) {
    EXPECT_EQ(evaluate(d), bridged_bracket(d));
  }
}

TEST(Corpus, DeterministicAndValid) {
  auto a = build_corpus(99, 30), b = build_corpus(99, 30);
  ASSERT_EQ(a.size(), 30u);
  CorpusLimits lim;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].label, b[i].label);
    EXPECT_EQ(canonical_code(a[i].diagram), canonical_code(b[i].diagram));
    EXPECT_TRUE(validate(a[i].diagram).empty()) << a[i].label;
    EXPECT_LE(a[i].diagram.crossing_count(), lim.max_crossings);
    EXPECT_LE(resolved_term_count(a[i].diagram), lim.max_terms);
    for (const auto& [id, e] : a[i].diagram.edges()) EXPECT_LE(e.spin.twice_j, lim.max_twice_spin);
  }
}

TEST(Corpus, AffordableSitesRespectBudget) {
  std::mt19937_64 rng(3);
  for (const auto& e : build_corpus(4, 20)) {
    for (MoveKind k : {MoveKind::R2Add, MoveKind::BeltTwist}) {
      auto m = affordable_site(e.diagram, k, rng, 300);
      if (m) EXPECT_LE(resolved_term_count(apply_move(e.diagram, *m)), 300u);
    }
    auto b = affordable_site(e.diagram, MoveKind::BeltTwist, rng, 100000, 2);
    if (b) EXPECT_EQ(b->cluster.size(), 2u);
  }
}

TEST(PlanarCorpus, ConfluentUnderRandomOrders) {
  for (const auto& e : build_planar_corpus(21, 15)) {
    EXPECT_EQ(e.diagram.crossing_count(), 0) << e.label;
    ReduceOptions base;
    base.memo = false;
    ExactValue v = reduce_planar(e.diagram, base);
    for (std::uint64_t s = 1; s <= 3; ++s) {
      ReduceOptions o;
      o.strategy = FaceStrategy::Random;
      o.seed = s;
      o.memo = false;
      EXPECT_EQ(reduce_planar(e.diagram, o), v) << e.label;
    }
  }
}
