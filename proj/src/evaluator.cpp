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

#include "spinnet/evaluator.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <shared_mutex>
#include <thread>

namespace spinnet {

namespace {

struct ExactRing {
  using T = ExactValue;
  T zero() const { return ExactValue(); }
  T one() const { return ExactValue(1); }
  T integer(long n) const { return ExactValue(n); }
  T delta(Spin j) const { return spinnet::delta(j); }
  T theta(Spin a, Spin b, Spin c) const { return theta_wm({a, b, c}); }
  T racah(Spin a, Spin b, Spin c, Spin d, Spin j, Spin l) const { return racah_q(a, b, c, d, j, l); }
  T crossing(Spin a, Spin b, Spin i, CrossingSign s) const { return crossing_coefficient(a, b, i, s); }
  static bool is_zero(const T& x) { return x.is_zero(); }
};

struct NumericRing {
  using T = Complex;
  long double angle;
  T zero() const { return 0; }
  T one() const { return 1; }
  T integer(long n) const { return static_cast<long double>(n); }
  T delta(Spin j) const { return numeric::delta(j, angle); }
  T theta(Spin a, Spin b, Spin c) const { return numeric::theta_wm({a, b, c}, angle); }
  T racah(Spin a, Spin b, Spin c, Spin d, Spin j, Spin l) const { return numeric::racah_q(a, b, c, d, j, l, angle); }
  T crossing(Spin a, Spin b, Spin i, CrossingSign s) const { return numeric::crossing_coefficient(a, b, i, s, angle); }
  static bool is_zero(const T& x) { return x == T(0); }
};

template <class T>
struct Memo {
  std::shared_mutex mutex;
  std::map<std::vector<long>, T> table;
  std::atomic<std::size_t> hits{0};

  bool find(const std::vector<long>& key, T& out) {
    std::shared_lock lock(mutex);
    auto it = table.find(key);
    if (it == table.end()) return false;
    out = it->second;
    ++hits;
    return true;
  }
  void store(const std::vector<long>& key, const T& v) {
    std::unique_lock lock(mutex);
    table.emplace(key, v);
  }
};

Memo<ExactValue>& exact_memo() {
  static Memo<ExactValue> m;
  return m;
}

// one table per level; the angle is part of the key
std::mutex g_numeric_memo_mutex;
std::map<long double, std::unique_ptr<Memo<Complex>>> g_numeric_memos;

Memo<Complex>& numeric_memo(long double angle) {
  std::lock_guard lock(g_numeric_memo_mutex);
  auto& slot = g_numeric_memos[angle];
  if (!slot) slot = std::make_unique<Memo<Complex>>();
  return *slot;
}

Diagram subdiagram(const Diagram& d, const Component& c) {
  Diagram s;
  for (NodeId n : c.nodes) s.insert_raw(d.node(n));
  for (EdgeId e : c.edges) s.insert_raw(d.edge(e));
  return s;
}

EdgeEnd other_end(const Diagram& d, EdgeId e, NodeId n, int slot) {
  const Edge& ed = d.edge(e);
  return ed.ends[ed.ends[0] == EdgeEnd{n, slot} ? 1 : 0];
}

// Remove a vertex whose only other legs are two equal-spin edges, joining them.
void splice(Diagram& d, NodeId v) {
  const Node& n = d.node(v);
  std::vector<int> used;
  for (int k = 0; k < n.degree(); ++k) {
    if (n.slots[k] >= 0) used.push_back(k);
  }
  if (used.empty()) {
    d.remove_node(v);
    return;
  }
  if (used.size() != 2) return;
  EdgeId x = n.slots[used[0]], y = n.slots[used[1]];
  Spin s = d.edge(x).spin;
  if (x == y) {
    d.remove_edge(x);
    d.remove_node(v);
    d.add_loop(s);
    return;
  }
  EdgeEnd ox = other_end(d, x, v, used[0]), oy = other_end(d, y, v, used[1]);
  d.remove_edge(x);
  d.remove_edge(y);
  d.remove_node(v);
  d.add_edge(s, ox, oy);
}

template <class Ring>
class Reducer {
 public:
  using T = typename Ring::T;

  Reducer(Ring ring, const ReduceOptions& opts, Memo<T>* memo, std::vector<TraceStep>* trace)
      : ring_(ring), opts_(opts), memo_(memo), trace_(trace), rng_(opts.seed) {}

  T run(const Diagram& d) {
    budget_ = 50 * static_cast<long>(d.edges().size() + d.nodes().size()) + 50;
    return value(d, 0);
  }

 private:
  void note(const char* rule, const std::string& site) {
    if (trace_ && tracing_) trace_->push_back({rule, site});
  }

  void check(long steps) const {
    if (steps > budget_) throw ReductionDefect("planar reduction exceeded its step budget");
  }

  T value(Diagram d, long steps) {
    T factor = ring_.one();
    for (const auto& [id, n] : d.nodes()) {
      if (n.kind != NodeKind::Vertex) throw std::invalid_argument("reduce_planar needs a crossing-free diagram");
    }
    for (const auto& [id, n] : std::map<NodeId, Node>(d.nodes())) {
      if (n.orient != VertexOrientation::Minus) continue;
      if (vertex_reversal_sign(d.triple(id)) < 0) factor = -factor;
      d.set_orientation(id, VertexOrientation::Plus);
      note("sign", "v" + std::to_string(id));
    }
    for (;;) {
      EdgeId zero = -1;
      for (const auto& [id, e] : d.edges()) {
        if (e.spin.twice_j == 0) {
          zero = id;
          break;
        }
      }
      if (zero < 0) break;
      note("zero-edge", "e" + std::to_string(zero));
      Edge e = d.edge(zero);
      d.remove_edge(zero);
      if (e.loop) continue;
      std::set<NodeId> touched{e.ends[0].node, e.ends[1].node};
      for (NodeId v : touched) {
        if (d.has_node(v)) splice(d, v);
      }
      check(++steps);
    }
    auto comps = components(d);
    for (const Component& c : comps) {
      T v = comps.size() == 1 ? connected(d, steps) : connected(subdiagram(d, c), steps);
      if (Ring::is_zero(v)) return ring_.zero();
      factor = factor * v;
    }
    return factor;
  }

  T connected(const Diagram& d, long steps) {
    if (d.nodes().empty()) {
      if (d.edges().empty()) return ring_.one();
      note("loop", "e" + std::to_string(d.edges().begin()->first));
      return ring_.delta(d.edges().begin()->second.spin);
    }
    std::vector<long> key;
    if (memo_) {
      key = canonical_code(d);
      T hit;
      if (memo_->find(key, hit)) return hit;
    }
    T v = reduce_component(d, steps);
    if (memo_) memo_->store(key, v);
    return v;
  }

  T reduce_component(const Diagram& d, long steps) {
    check(steps);
    for (const auto& [id, e] : d.edges()) {
      if (e.ends[0].node == e.ends[1].node) {
        note("cut", "e" + std::to_string(id));
        return ring_.zero();
      }
    }
    auto fs = faces(d);
    for (const auto& f : fs) {
      std::set<EdgeId> seen;
      for (const Dart& x : f) {
        if (!seen.insert(x.edge).second) {
          note("cut", "e" + std::to_string(x.edge));
          return ring_.zero();
        }
      }
    }
    std::size_t smallest = fs.front().size();
    for (const auto& f : fs) smallest = std::min(smallest, f.size());
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].size() == smallest) candidates.push_back(i);
    }
    std::size_t fi = candidates.front();
    std::size_t di = 0;
    if (opts_.strategy == FaceStrategy::Random) {
      fi = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng_)];
      di = std::uniform_int_distribution<std::size_t>(0, fs[fi].size() - 1)(rng_);
    }
    const auto& face = fs[fi];
    if (smallest == 2) return bubble(d, face, steps);
    return recouple(d, face[di], steps);
  }

  T bubble(const Diagram& d, const std::vector<Dart>& face, long steps) {
    EdgeEnd t = d.tail(face[0]);
    EdgeEnd h = d.head(face[0]);
    NodeId u = t.node, w = h.node;
    EdgeId x = face[0].edge, y = face[1].edge;
    int su = 0, sw = 0;
    for (int k = 0; k < 3; ++k) {
      EdgeId e = d.node(u).slots[k];
      if (e != x && e != y) su = k;
      e = d.node(w).slots[k];
      if (e != x && e != y) sw = k;
    }
    EdgeId a = d.node(u).slots[su], c = d.node(w).slots[sw];
    Spin sa = d.edge(a).spin;
    note("bubble", "e" + std::to_string(x) + ",e" + std::to_string(y));
    if (d.edge(c).spin != sa) return ring_.zero();
    T coeff = ring_.theta(sa, d.edge(x).spin, d.edge(y).spin);
    if (a == c) return coeff;
    coeff = coeff / ring_.delta(sa);
    Diagram out = d;
    EdgeEnd oa = other_end(d, a, u, su), oc = other_end(d, c, w, sw);
    out.remove_edge(x);
    out.remove_edge(y);
    out.remove_edge(a);
    out.remove_edge(c);
    out.remove_node(u);
    out.remove_node(w);
    out.add_edge(sa, oa, oc);
    return coeff * value(std::move(out), steps + 1);
  }

  // H-shaped neighbourhood of the edge (u: e,a,b ccw; w: e,c,d ccw) becomes
  // u: l,d,a and w: l,b,c, summed over l.
  T recouple(const Diagram& d, const Dart& dart, long steps) {
    EdgeEnd tu = d.tail(dart), tw = d.head(dart);
    NodeId u = tu.node, w = tw.node;
    EdgeId e = dart.edge;
    struct Use {
      EdgeId edge;
      int end;
    };
    auto use = [&](NodeId n, int slot) { return Use{d.node(n).slots[slot], d.end_at(n, slot)}; };
    Use a = use(u, (tu.slot + 1) % 3), b = use(u, (tu.slot + 2) % 3);
    Use c = use(w, (tw.slot + 1) % 3), dd = use(w, (tw.slot + 2) % 3);
    Spin sa = d.edge(a.edge).spin, sb = d.edge(b.edge).spin, sc = d.edge(c.edge).spin, sd = d.edge(dd.edge).spin;
    Spin sj = d.edge(e).spin;
    Diagram base = d;
    for (const Use& x : {a, b, c, dd}) base.detach(x.edge, x.end);
    base.attach(dd.edge, dd.end, {u, (tu.slot + 1) % 3});
    base.attach(a.edge, a.end, {u, (tu.slot + 2) % 3});
    base.attach(b.edge, b.end, {w, (tw.slot + 1) % 3});
    base.attach(c.edge, c.end, {w, (tw.slot + 2) % 3});
    note("recouple", "e" + std::to_string(e));
    T total = ring_.zero();
    bool first = true;
    for (int l : channels(sa.twice_j, sd.twice_j)) {
      if (!admissible(sb.twice_j, sc.twice_j, l)) continue;
      Diagram out = base;
      out.set_spin(e, Spin(l));
      T coeff = ring_.racah(sa, sb, sc, sd, sj, Spin(l));
      bool was = tracing_;
      tracing_ = was && first;
      T v = value(std::move(out), steps + 1);
      tracing_ = was;
      first = false;
      total = total + coeff * v;
    }
    return total;
  }

  Ring ring_;
  ReduceOptions opts_;
  Memo<T>* memo_;
  std::vector<TraceStep>* trace_;
  bool tracing_ = true;
  std::mt19937_64 rng_;
  long budget_ = 0;
};

struct CrossingInfo {
  NodeId id;
  Spin ja, jb;
  CrossingSign kappa;
  int sigma;
  std::vector<int> chans;
};

std::vector<CrossingInfo> crossing_infos(const Diagram& d) {
  std::vector<CrossingInfo> out;
  auto orient = odd_orientation(d);
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind != NodeKind::Crossing) continue;
    CrossingInfo x;
    x.id = id;
    x.ja = d.edge(n.slots[0]).spin;
    x.jb = d.edge(n.slots[1]).spin;
    x.kappa = n.over == 0 ? CrossingSign::Over : CrossingSign::Under;
    int eps = crossing_sign(d, id, orient);
    int k = x.kappa == CrossingSign::Over ? 1 : -1;
    x.sigma = (eps != 0 && eps == k) ? -1 : 1;
    x.chans = channels(x.ja.twice_j, x.jb.twice_j);
    out.push_back(std::move(x));
  }
  return out;
}

Diagram resolve_with(const Diagram& d, const std::vector<CrossingInfo>& xs, const std::vector<int>& choice) {
  Diagram out = d;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    NodeId id = xs[i].id;
    std::array<std::pair<EdgeId, int>, 4> uses;
    for (int k = 0; k < 4; ++k) uses[k] = {out.node(id).slots[k], out.end_at(id, k)};
    out.remove_node(id);
    NodeId u = out.add_vertex(VertexOrientation::Minus);
    NodeId w = out.add_vertex(VertexOrientation::Plus);
    out.attach(uses[0].first, uses[0].second, {u, 0});
    out.attach(uses[1].first, uses[1].second, {u, 1});
    out.attach(uses[2].first, uses[2].second, {w, 0});
    out.attach(uses[3].first, uses[3].second, {w, 1});
    out.add_edge(Spin(xs[i].chans[choice[i]]), {u, 2}, {w, 2});
  }
  return out;
}

template <class Ring>
typename Ring::T term_weight(const Ring& ring, const std::vector<CrossingInfo>& xs, const std::vector<int>& choice) {
  typename Ring::T w = ring.one();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w = w * ring.crossing(xs[i].ja, xs[i].jb, Spin(xs[i].chans[choice[i]]), xs[i].kappa);
    if (xs[i].sigma < 0) w = -w;
  }
  return w;
}

std::vector<int> choice_of(const std::vector<CrossingInfo>& xs, std::size_t index) {
  std::vector<int> c(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    c[i] = static_cast<int>(index % xs[i].chans.size());
    index /= xs[i].chans.size();
  }
  return c;
}

template <class Ring>
typename Ring::T reduce_with(const Ring& ring, const Diagram& d, const ReduceOptions& opts, Memo<typename Ring::T>* shared) {
  if (opts.strategy == FaceStrategy::SmallestFirst && opts.memo) {
    return Reducer<Ring>(ring, opts, shared, nullptr).run(d);
  }
  Memo<typename Ring::T> local;
  return Reducer<Ring>(ring, opts, opts.memo ? &local : nullptr, nullptr).run(d);
}

template <class Ring>
typename Ring::T evaluate_with(const Ring& ring, const Diagram& d, const EvaluateOptions& opts,
                               Memo<typename Ring::T>* shared) {
  using T = typename Ring::T;
  auto violations = validate(d);
  if (!violations.empty()) throw std::invalid_argument("invalid diagram: " + violations.front().message);
  auto xs = crossing_infos(d);
  std::size_t count = 1;
  for (const auto& x : xs) count *= x.chans.size();
  int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(count)));
  std::vector<T> partial(threads, ring.zero());
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](int t) {
    try {
      for (std::size_t i = t; i < count; i += threads) {
        auto choice = choice_of(xs, i);
        T v = reduce_with(ring, resolve_with(d, xs, choice), opts.reduce, shared);
        if (Ring::is_zero(v)) continue;
        partial[t] = partial[t] + term_weight(ring, xs, choice) * v;
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T total = ring.zero();
  for (const T& p : partial) total = total + p;
  return total;
}

}  // namespace

WeightedPlanarSum resolve_crossings(const Diagram& d) {
  auto xs = crossing_infos(d);
  std::size_t count = resolved_term_count(d);
  WeightedPlanarSum out;
  out.reserve(count);
  ExactRing ring;
  for (std::size_t i = 0; i < count; ++i) {
    auto choice = choice_of(xs, i);
    out.push_back({term_weight(ring, xs, choice), resolve_with(d, xs, choice)});
  }
  return out;
}

std::size_t resolved_term_count(const Diagram& d) {
  std::size_t count = 1;
  for (const auto& x : crossing_infos(d)) count *= x.chans.size();
  return count;
}

ExactValue reduce_planar(const Diagram& d, const ReduceOptions& opts) {
  return reduce_with(ExactRing{}, d, opts, &exact_memo());
}

Complex reduce_planar_numeric(const Diagram& d, long double k, const ReduceOptions& opts) {
  long double angle = q_angle(k);
  return reduce_with(NumericRing{angle}, d, opts, &numeric_memo(angle));
}

ExactValue reduce_planar_traced(const Diagram& d, std::vector<TraceStep>& trace) {
  ReduceOptions opts;
  opts.memo = false;
  opts.trace = true;
  return Reducer<ExactRing>(ExactRing{}, opts, nullptr, &trace).run(d);
}

ExactValue evaluate(const Diagram& d, const EvaluateOptions& opts) {
  return evaluate_with(ExactRing{}, d, opts, &exact_memo());
}

Complex evaluate(const Diagram& d, const NumericMode& mode, const EvaluateOptions& opts) {
  long double angle = q_angle(mode.k);
  return evaluate_with(NumericRing{angle}, d, opts, &numeric_memo(angle));
}

MemoStats planar_memo_stats() {
  auto& m = exact_memo();
  std::shared_lock lock(m.mutex);
  return {m.table.size(), m.hits.load()};
}

void clear_planar_memo() {
  {
    auto& m = exact_memo();
    std::unique_lock lock(m.mutex);
    m.table.clear();
    m.hits = 0;
  }
  std::lock_guard lock(g_numeric_memo_mutex);
  g_numeric_memos.clear();
}

Json trace_to_json(const std::vector<TraceStep>& trace) {
  Json out = Json::array();
  for (const TraceStep& t : trace) out.push_back({{"rule", t.rule}, {"site", t.site}});
  return out;
}

}  // namespace spinnet
