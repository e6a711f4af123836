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

// invariant: evaluate a spin network and its ambient invariants.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "spinnet/ambient.hpp"
#include "spinnet/builtins.hpp"
#include "spinnet/diagram_io.hpp"
#include "spinnet/evaluator.hpp"
#include "spinnet/table_cache.hpp"

using namespace spinnet;

namespace {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string builtin;
  std::string file;
  std::string mode = "exact";
  std::string k;
  std::string q_convention = "k";
  int order = kDefaultSeriesOrder;
  std::string output = "text";
  std::string checks;
  std::uint64_t seed = 0;
  int max_sites = 3;
  int threads = 1;
  int precision = 12;
};

long double parse_level(const std::string& text) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::exception&) {
    throw InputError("--k must be a positive rational, got '" + text + "'");
  }
  if (r <= 0) throw InputError("--k must be positive");
  return to_long_double(r);
}

std::vector<MoveKind> parse_checks(const std::string& list) {
  static const std::map<std::string, std::vector<MoveKind>> names{
      {"R1", {MoveKind::CurlAdd, MoveKind::CurlRemove}},
      {"R2", {MoveKind::R2Add, MoveKind::R2Remove}},
      {"R3", {MoveKind::R3}},
      {"vertex-twist", {MoveKind::VertexTwist}},
      {"belt-twist", {MoveKind::BeltTwist}},
      {"flip", {MoveKind::Flip}},
  };
  std::vector<MoveKind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto it = names.find(item);
    if (it == names.end()) throw InputError("unknown move check '" + item + "'");
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

Diagram load_input(const RunConfig& cfg) {
  if (cfg.builtin.empty() == cfg.file.empty()) throw InputError("give exactly one of --builtin and --file");
  if (!cfg.builtin.empty()) return builtin(cfg.builtin);
  std::ifstream in(cfg.file);
  if (!in) throw InputError("cannot read " + cfg.file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

std::vector<Move> pick_sites(const Diagram& d, MoveKind kind, std::mt19937_64& rng, int max_sites) {
  if (kind == MoveKind::Flip) {
    Move m;
    m.kind = MoveKind::Flip;
    return {m};
  }
  std::vector<Move> sites = enumerate_sites(d, kind, 2, 2);
  std::shuffle(sites.begin(), sites.end(), rng);
  if (max_sites > 0 && static_cast<int>(sites.size()) > max_sites) sites.resize(max_sites);
  return sites;
}

std::string render_checks_text(const std::vector<MoveCheck>& checks) {
  std::string out;
  for (const MoveCheck& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + describe(c.move);
    if (c.e_ratio) out += "  E ratio " + c.e_ratio->to_string();
    if (!c.passed) out += "  residual " + c.residual.to_string();
    if (!c.detail.empty() && c.detail != describe(c.move)) out += "  (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

int run(const RunConfig& cfg) {
  if (cfg.order < 2) throw InputError("--order must be at least 2");
  if (cfg.threads < 1) throw InputError("--threads must be positive");
  set_q_convention(cfg.q_convention == "k+2" ? QConvention::Shifted : QConvention::Plain);
  std::string cache = cache_dir_from_env();
  if (!cache.empty()) load_tet_table(cache);

  Diagram d = load_input(cfg);
  auto problems = validate(d);
  if (!problems.empty()) throw InputError("invalid diagram: " + problems.front().message);
  std::vector<MoveKind> kinds = parse_checks(cfg.checks);

  EvaluateOptions opts;
  opts.threads = cfg.threads;
  opts.reduce.seed = cfg.seed;
  Json j;
  std::string text;

  if (cfg.mode == "numeric") {
    if (cfg.k.empty()) throw InputError("numeric mode needs --k");
    NumericMode nm{parse_level(cfg.k), cfg.precision};
    Complex v = evaluate(d, nm, opts);
    std::string s = format_complex(v, cfg.precision);
    j["E"] = s;
    j["k"] = cfg.k;
    text = "E(k=" + cfg.k + ") = " + s + "\n";
  } else {
    AmbientResult r = ambient_from_value(evaluate(d, opts), cfg.order);
    j = to_json(r);
    text += "E  = " + r.E.to_string() + "\n";
    text += "K0 = " + r.K0.to_string() + "\n";
    text += "v1 = " + (r.v1 ? r.v1->to_string() : std::string("undefined")) + "\n";
    text += "P  = " + (r.P ? r.P->to_string() : std::string("undefined")) + "\n";
    for (const auto& [i, c] : r.vassiliev) text += "v" + std::to_string(i) + " = " + c.to_string() + "\n";
    if (!r.note.empty()) text += "note: " + r.note + "\n";
    if (!cfg.k.empty()) {
      std::string s = format_complex(evaluate_numeric(r.E, parse_level(cfg.k)), cfg.precision);
      j["E_at_k"] = s;
      text += "E(k=" + cfg.k + ") = " + s + "\n";
    }
  }

  bool all_passed = true;
  if (!kinds.empty()) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<MoveCheck> checks;
    Json skipped = Json::array();
    std::string skipped_text;
    for (MoveKind kind : kinds) {
      auto sites = pick_sites(d, kind, rng, cfg.max_sites);
      if (sites.empty()) {
        skipped.push_back(to_string(kind));
        skipped_text += "SKIP " + to_string(kind) + " (no sites)\n";
      }
      for (const Move& m : sites) checks.push_back(check_move_invariance(d, m, cfg.order));
    }
    Json arr = Json::array();
    for (const MoveCheck& c : checks) {
      arr.push_back(to_json(c));
      all_passed = all_passed && c.passed;
    }
    j["checks"] = arr;
    j["skipped"] = skipped;
    text += render_checks_text(checks) + skipped_text;
  }

  if (!cache.empty()) save_tet_table(cache);
  std::cout << (cfg.output == "json" ? j.dump(2) + "\n" : text);
  return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate spin networks and their ambient invariants"};
  RunConfig cfg;
  app.add_option("--builtin", cfg.builtin, "builtin diagram, e.g. trefoil:j=1/2 or theta:a=1,b=1,c=1");
  app.add_option("--file", cfg.file, "diagram JSON file");
  app.add_option("--mode", cfg.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  app.add_option("--k", cfg.k, "level (positive rational)");
  app.add_option("--q-convention", cfg.q_convention, "q = exp(2 pi i / k) or exp(2 pi i / (k+2))")
      ->check(CLI::IsMember({"k", "k+2"}));
  app.add_option("--order", cfg.order, "series order N (v2 .. vN)");
  app.add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--check-moves", cfg.checks, "comma list of R1,R2,R3,vertex-twist,belt-twist,flip");
  app.add_option("--seed", cfg.seed, "seed for site selection and reduction order");
  app.add_option("--max-sites", cfg.max_sites, "sites checked per move kind (0 for all)");
  app.add_option("--threads", cfg.threads, "worker threads");
  app.add_option("--precision", cfg.precision, "significant digits for numeric output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    return run(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return 2;
  }
}
