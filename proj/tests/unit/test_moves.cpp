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

#include <random>

#include "spinnet/builtins.hpp"
#include "spinnet/diagram_io.hpp"
#include "spinnet/moves.hpp"

using namespace spinnet;

namespace {

std::vector<Diagram> bases() {
  return {unknot(Spin(1)),
          theta(Spin(1), Spin(1), Spin(2)),
          tetrahedron(Spin(1), Spin(1), Spin(1), Spin(1), Spin(2), Spin(2)),
          trefoil(Spin(1)),
          figure8(Spin(2)),
          hopf(Spin(1), Spin(2)),
          braid_closure(3, {1, 2, 1}, Spin(1)),
          braid_closure(3, {1, -2, 1, 2}, Spin(3))};
}

bool clean(const Diagram& d) {
  auto v = validate(d);
  for (int chi : euler_characteristics(d)) {
    if (chi != 2) return false;
  }
  return v.empty();
}

Move curl_remove_at(NodeId n) {
  Move m;
  m.kind = MoveKind::CurlRemove;
  m.node = n;
  return m;
}

// Greedy R2 cancellation with up to two R3 detours; used to undo braid insertions.
bool simplifies_to(const Diagram& start, const std::vector<long>& target, int r3_budget = 2) {
  Diagram d = start;
  for (;;) {
    if (canonical_code(d) == target) return true;
    auto r2 = enumerate_sites(d, MoveKind::R2Remove);
    if (r2.empty()) break;
    d = apply_move(d, r2.front());
  }
  if (r3_budget == 0) return false;
  for (const Move& m : enumerate_sites(d, MoveKind::R3)) {
    if (simplifies_to(apply_move(d, m), target, r3_budget - 1)) return true;
  }
  return false;
}

}  // namespace

TEST(Moves, CurlAddExamples) {
  Move m;
  m.kind = MoveKind::CurlAdd;
  m.dart = {0, 0};
  m.hand = Handedness::Right;
  Diagram d = apply_move(unknot(Spin(1)), m);
  EXPECT_EQ(d.crossing_count(), 1);
  EXPECT_TRUE(clean(d));
  EXPECT_EQ(canonical_code(d), canonical_code(curl(Spin(1), Handedness::Right)));
  m.hand = Handedness::Left;
  EXPECT_EQ(canonical_code(apply_move(unknot(Spin(1)), m)), canonical_code(curl(Spin(1), Handedness::Left)));
}

TEST(Moves, CurlSignMatchesRequest) {
  for (const Diagram& base : bases()) {
    for (const Move& m : enumerate_sites(base, MoveKind::CurlAdd)) {
      for (bool left_side : {false, true}) {
        Move mm = m;
        mm.left_side = left_side;
        Diagram d = apply_move(base, mm);
        ASSERT_TRUE(clean(d)) << describe(mm);
        NodeId x = d.nodes().rbegin()->first;
        EXPECT_EQ(curl_sign(d, x), m.hand == Handedness::Right ? 1 : -1) << describe(mm);
        Diagram back = apply_move(d, curl_remove_at(x));
        EXPECT_EQ(canonical_code(back), canonical_code(base)) << describe(mm);
      }
    }
  }
}

TEST(Moves, CurlChangesWritheByOne) {
  Diagram t = trefoil(Spin(1));
  for (const Move& m : enumerate_sites(t, MoveKind::CurlAdd)) {
    EXPECT_EQ(writhe(apply_move(t, m)) - writhe(t), m.hand == Handedness::Right ? 1 : -1);
  }
}

TEST(Moves, R2AddThenRemove) {
  for (const Diagram& base : bases()) {
    auto code = canonical_code(base);
    for (const Move& m : enumerate_sites(base, MoveKind::R2Add)) {
      Diagram d = apply_move(base, m);
      ASSERT_TRUE(clean(d)) << describe(m);
      EXPECT_EQ(d.crossing_count(), base.crossing_count() + 2);
      auto removals = enumerate_sites(d, MoveKind::R2Remove);
      bool restored = false;
      for (const Move& r : removals) {
        Diagram e = apply_move(d, r);
        EXPECT_TRUE(clean(e));
        EXPECT_EQ(e.crossing_count(), base.crossing_count());
        if (canonical_code(e) == code) restored = true;
      }
      EXPECT_TRUE(restored) << describe(m);
    }
  }
}

TEST(Moves, R2OnDoubledStrand) {
  // two parallel unknots pushed across each other and back
  Diagram d = unlink(Spin(1), Spin(2));
  Move m;
  m.kind = MoveKind::R2Add;
  m.dart = {0, 0};
  m.dart2 = {1, 0};
  Diagram pushed = apply_move(d, m);
  EXPECT_TRUE(clean(pushed));
  EXPECT_EQ(pushed.crossing_count(), 2);
  auto sites = enumerate_sites(pushed, MoveKind::R2Remove);
  ASSERT_FALSE(sites.empty());
  Diagram back = apply_move(pushed, sites.front());
  EXPECT_EQ(back.crossing_count(), 0);
  EXPECT_EQ(canonical_code(back), canonical_code(d));
}

TEST(Moves, R2RemoveRejectsAlternatingBigon) {
  // the Hopf diagram has bigons whose strands alternate
  EXPECT_TRUE(enumerate_sites(hopf(Spin(1), Spin(1)), MoveKind::R2Remove).empty());
  Move m;
  m.kind = MoveKind::R2Remove;
  m.dart = faces(hopf(Spin(1), Spin(1))).front().front();
  EXPECT_THROW(apply_move(hopf(Spin(1), Spin(1)), m), MoveError);
}

TEST(Moves, R3IsAnInvolution) {
  int seen = 0;
  for (const Diagram& base : bases()) {
    for (const Move& m : enumerate_sites(base, MoveKind::R3)) {
      Diagram d = apply_move(base, m);
      ASSERT_TRUE(clean(d));
      EXPECT_EQ(d.crossing_count(), base.crossing_count());
      bool back = false;
      for (const Move& m2 : enumerate_sites(d, MoveKind::R3)) {
        if (canonical_code(apply_move(d, m2)) == canonical_code(base)) back = true;
      }
      EXPECT_TRUE(back);
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Moves, R3RejectsCyclicTriangle) {
  // every triangle of the standard trefoil diagram is alternating
  Diagram t = trefoil(Spin(1));
  EXPECT_TRUE(enumerate_sites(t, MoveKind::R3).empty());
  for (const auto& f : faces(t)) {
    if (f.size() != 3) continue;
    Move m;
    m.kind = MoveKind::R3;
    m.dart = f.front();
    EXPECT_THROW(apply_move(t, m), MoveError);
  }
}

TEST(Moves, VertexTwistUndo) {
  Diagram base = theta(Spin(1), Spin(1), Spin(2));
  for (const Move& m : enumerate_sites(base, MoveKind::VertexTwist)) {
    Diagram d = apply_move(base, m);
    ASSERT_TRUE(clean(d));
    EXPECT_EQ(d.crossing_count(), 1);
    EXPECT_NE(d.node(m.node).orient, base.node(m.node).orient);
    // twisting back the other way cancels by R2
    Move inv = m;
    inv.hand = m.hand == Handedness::Right ? Handedness::Left : Handedness::Right;
    inv.slot = (3 - m.slot) % 3;  // the stem leg lands on the mirrored slot
    Diagram e = apply_move(d, inv);
    EXPECT_TRUE(simplifies_to(e, canonical_code(base), 0)) << describe(m);
  }
}

TEST(Moves, BeltTwistThenUndo) {
  Diagram base = tetrahedron(Spin(1), Spin(1), Spin(1), Spin(1), Spin(2), Spin(2));
  auto code = canonical_code(base);
  int checked = 0;
  for (const Move& m : enumerate_sites(base, MoveKind::BeltTwist, 2)) {
    Diagram d = apply_move(base, m);
    ASSERT_TRUE(clean(d)) << describe(m);
    EXPECT_EQ(d.crossing_count(), 3);
    Move inv = m;
    inv.hand = m.hand == Handedness::Right ? Handedness::Left : Handedness::Right;
    inv.slot = (3 - m.slot) % 3;  // the stem leg lands on the mirrored slot
    Diagram e = apply_move(d, inv);
    ASSERT_TRUE(clean(e));
    EXPECT_TRUE(simplifies_to(e, code)) << describe(m);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Moves, BeltTwistLegCount) {
  Diagram base = tetrahedron(Spin(2), Spin(2), Spin(2), Spin(2), Spin(2), Spin(2));
  for (const Move& m : enumerate_sites(base, MoveKind::BeltTwist, 3)) {
    Diagram d = apply_move(base, m);
    int legs = static_cast<int>(m.cluster.size()) + 1;
    EXPECT_EQ(d.crossing_count(), legs * (legs - 1) / 2);
    EXPECT_TRUE(clean(d));
  }
}

TEST(Moves, RungInsertion) {
  for (const Diagram& base : bases()) {
    for (const Move& m : enumerate_sites(base, MoveKind::RungInsert, 3, 2)) {
      Diagram d = apply_move(base, m);
      EXPECT_TRUE(clean(d)) << describe(m);
      EXPECT_EQ(d.vertex_count(), base.vertex_count() + 2);
    }
  }
}

TEST(Moves, PatternMismatch) {
  Move m;
  m.kind = MoveKind::CurlRemove;
  m.node = 0;
  EXPECT_THROW(apply_move(theta(Spin(1), Spin(1), Spin(2)), m), MoveError);
  m.kind = MoveKind::R3;
  m.dart = {0, 0};
  EXPECT_THROW(apply_move(theta(Spin(1), Spin(1), Spin(2)), m), MoveError);
  m.kind = MoveKind::BeltTwist;
  m.cluster = {0, 1};
  m.node = 0;
  m.slot = 0;
  EXPECT_THROW(apply_move(theta(Spin(1), Spin(1), Spin(2)), m), MoveError);
}

TEST(Moves, RandomSequencesStayValid) {
  std::mt19937_64 rng(17);
  const MoveKind kinds[] = {MoveKind::CurlAdd,     MoveKind::CurlRemove, MoveKind::R2Add,
                            MoveKind::R2Remove,    MoveKind::R3,         MoveKind::VertexTwist,
                            MoveKind::BeltTwist,   MoveKind::RungInsert, MoveKind::Flip};
  std::uniform_int_distribution<int> pick(0, 8);
  for (const Diagram& base : bases()) {
    Diagram d = base;
    for (int step = 0; step < 12; ++step) {
      MoveKind k = kinds[pick(rng)];
      auto m = random_site(d, k, rng, 2, 2);
      if (!m) continue;
      if (d.crossing_count() > 8 && (k == MoveKind::R2Add || k == MoveKind::BeltTwist)) continue;
      d = apply_move(d, *m);
      ASSERT_TRUE(clean(d)) << describe(*m);
      EXPECT_EQ(parse_diagram(serialize_diagram(d)), d);
      EXPECT_EQ(flip(flip(d)), d);
    }
  }
}
