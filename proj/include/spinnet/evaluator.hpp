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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinnet/diagram.hpp"
#include "spinnet/scalar_io.hpp"

namespace spinnet {

/** Raised when a reduction path runs past its step budget. */
class ReductionDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct WeightedTerm {
  ExactValue weight;
  Diagram diagram;
};
using WeightedPlanarSum = std::vector<WeightedTerm>;

/**
 * Replace every crossing by its channel sum. Slots 0,1 of a crossing fuse at a
 * '-' vertex, slots 2,3 at a '+' vertex, joined by the channel edge.
 */
WeightedPlanarSum resolve_crossings(const Diagram& d);
/** Number of terms resolve_crossings would produce. */
std::size_t resolved_term_count(const Diagram& d);

enum class FaceStrategy {
  SmallestFirst,  // lowest-index face among the smallest, first dart
  Random,         // random face among the smallest, random dart; seeded
};

struct ReduceOptions {
  FaceStrategy strategy = FaceStrategy::SmallestFirst;
  std::uint64_t seed = 0;
  /** Share the process-wide memo (SmallestFirst only). */
  bool memo = true;
  /** Record applied identities; only honoured by reduce_planar_traced. */
  bool trace = false;
};

struct TraceStep {
  std::string rule;  // "sign", "zero-edge", "loop", "bubble", "cut", "recouple"
  std::string site;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/** [{"rule": ..., "site": ...}, ...] */
Json trace_to_json(const std::vector<TraceStep>& trace);

ExactValue reduce_planar(const Diagram& d, const ReduceOptions& opts = {});
Complex reduce_planar_numeric(const Diagram& d, long double k, const ReduceOptions& opts = {});
/** Deterministic reduction that also returns the identities applied along the first branch of each sum. */
ExactValue reduce_planar_traced(const Diagram& d, std::vector<TraceStep>& trace);

struct EvaluateOptions {
  int threads = 1;
  ReduceOptions reduce;
};

struct NumericMode {
  long double k = 20;
  int precision = 12;
};

ExactValue evaluate(const Diagram& d, const EvaluateOptions& opts = {});
/** Everything in complex arithmetic at the level-k root of unity. */
Complex evaluate(const Diagram& d, const NumericMode& mode, const EvaluateOptions& opts = {});

/** Memo statistics, for diagnostics. */
struct MemoStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
};
MemoStats planar_memo_stats();
void clear_planar_memo();

}  // namespace spinnet
