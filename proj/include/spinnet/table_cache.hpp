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

#include <cstddef>
#include <string>

namespace spinnet {

/** File name of the tetrahedron table inside a cache directory. */
inline constexpr const char* kTetTableFile = "tet_table.json";
inline constexpr int kTetTableVersion = 1;

/**
 * Loads tet values from `dir` into the coefficient memo. A missing file, a
 * version mismatch or a malformed table loads nothing. Returns the number of
 * entries loaded.
 */
std::size_t load_tet_table(const std::string& dir);

/** Writes the current tet memo to `dir`, creating it if needed. Returns the entry count. */
std::size_t save_tet_table(const std::string& dir);

/** Directory named by INVARIANT_CACHE_DIR, or empty. */
std::string cache_dir_from_env();

}  // namespace spinnet
