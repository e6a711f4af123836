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

#include "spinnet/table_cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "spinnet/recoupling.hpp"
#include "spinnet/scalar_io.hpp"

namespace spinnet {

namespace fs = std::filesystem;

std::size_t load_tet_table(const std::string& dir) {
  std::ifstream in(fs::path(dir) / kTetTableFile);
  if (!in) return 0;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("format", "") != "spinnet-tet-table" ||
      j.value("version", 0) != kTetTableVersion || !j.contains("entries")) {
    return 0;
  }
  std::vector<std::pair<TetKey, ExactValue>> parsed;
  try {
    for (const Json& e : j.at("entries")) {
      TetKey key{};
      const Json& k = e.at("key");
      if (k.size() != key.size()) return 0;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = k.at(i).get<int>();
      parsed.emplace_back(key, exact_value_from_json(e.at("value")));
    }
  } catch (const std::exception&) {
    return 0;
  }
  for (const auto& [key, value] : parsed) tet_cache_preload(key, value);
  return parsed.size();
}

std::size_t save_tet_table(const std::string& dir) {
  fs::create_directories(dir);
  auto snap = tet_cache_snapshot();
  std::sort(snap.begin(), snap.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json entries = Json::array();
  for (const auto& [key, value] : snap) entries.push_back({{"key", key}, {"value", to_json(value)}});
  Json j{{"format", "spinnet-tet-table"}, {"version", kTetTableVersion}, {"entries", std::move(entries)}};
  fs::path tmp = fs::path(dir) / (std::string(kTetTableFile) + ".tmp");
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
  }
  fs::rename(tmp, fs::path(dir) / kTetTableFile);
  return snap.size();
}

std::string cache_dir_from_env() {
  const char* v = std::getenv("INVARIANT_CACHE_DIR");
  return v ? std::string(v) : std::string();
}

}  // namespace spinnet
