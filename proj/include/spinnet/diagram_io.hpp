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

#include <stdexcept>
#include <string>
#include <string_view>

#include "spinnet/diagram.hpp"
#include "spinnet/scalar_io.hpp"

namespace spinnet {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& context, const std::string& message)
      : std::invalid_argument(context.empty() ? message : context + ": " + message), context_(context) {}
  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

/**
 * {"edges":[{"id":0,"two_j":1,"ends":[[0,0],[1,2]]}],
 *  "nodes":[{"id":0,"kind":"vertex","orient":"+","slots":[...]},
 *           {"id":1,"kind":"crossing","over":[0,2],"slots":[...]}]}
 * A free loop has "ends": []. "spin": "1/2" may replace "two_j".
 * The result is validated; violations raise ParseError.
 */
Diagram parse_diagram(std::string_view text);
Diagram diagram_from_json(const Json& j);
Json diagram_to_json(const Diagram& d);
std::string serialize_diagram(const Diagram& d);

}  // namespace spinnet
