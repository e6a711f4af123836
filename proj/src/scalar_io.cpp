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

#include "spinnet/scalar_io.hpp"

#include <cstdio>

namespace spinnet {

namespace {

Rational rational_field(const Json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a string \"a/b\"");
  return parse_rational(j.get<std::string>());
}

Json summand_json(const ExactSummand& s) {
  Json out;
  out["terms"] = to_json(s.numerator);
  out["den"] = to_json(s.denominator);
  Json rad = Json::object();
  for (const auto& [n, e] : s.radical) rad["delta_" + std::to_string(n - 1)] = to_string(e);
  out["radical"] = rad;
  return out;
}

ExactSummand summand_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw std::invalid_argument("summand needs \"terms\"");
  ExactSummand s;
  s.numerator = laurent_from_json(j.at("terms"));
  s.denominator = j.contains("den") ? laurent_from_json(j.at("den")) : LaurentQ(1);
  if (!s.denominator.has_rational_coefficients()) {
    throw std::invalid_argument("\"den\" must have rational coefficients");
  }
  if (j.contains("radical")) {
    for (const auto& [key, val] : j.at("radical").items()) {
      if (key.rfind("delta_", 0) != 0) throw std::invalid_argument("unknown radical base " + key);
      long two_j = std::stol(key.substr(6));
      if (two_j < 0) throw std::invalid_argument("negative spin in radical base " + key);
      s.radical[two_j + 1] += rational_field(val, "radical exponent");
    }
  }
  return s;
}

}  // namespace

Json to_json(const RadicalCoefficient& c) {
  Json out = Json::array();
  for (const auto& [m, r] : c.terms()) {
    Json rad = Json::object();
    for (const auto& [p, e] : m) rad[std::to_string(p)] = to_string(e);
    out.push_back({{"rat", to_string(r)}, {"rad", rad}});
  }
  return out;
}

RadicalCoefficient radical_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient must be an array");
  RadicalCoefficient c;
  for (const Json& t : j) {
    RadicalCoefficient term(rational_field(t.at("rat"), "rat"));
    if (t.contains("rad")) {
      for (const auto& [key, val] : t.at("rad").items()) {
        long p = std::stol(key);
        Rational e = rational_field(val, "radical exponent");
        if (p == -1) {
          if (e != Rational(1, 2)) throw std::invalid_argument("only (-1)^(1/2) is supported");
          term *= RadicalCoefficient::imaginary_unit();
        } else {
          term *= RadicalCoefficient::power(p, e);
        }
      }
    }
    c += term;
  }
  return c;
}

Json to_json(const LaurentQ& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.push_back({{"q_exp", to_string(it->first)}, {"coeff", to_json(it->second)}});
  }
  return out;
}

LaurentQ laurent_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial must be an array of terms");
  LaurentQ p;
  for (const Json& t : j) {
    p += LaurentQ::monomial(rational_field(t.at("q_exp"), "q_exp"), radical_from_json(t.at("coeff")));
  }
  return p;
}

Json to_json(const ExactValue& v) {
  auto parts = v.summands();
  if (parts.empty()) return Json{{"terms", Json::array()}, {"den", to_json(LaurentQ(1))}, {"radical", Json::object()}};
  if (parts.size() == 1) return summand_json(parts[0]);
  Json sum = Json::array();
  for (const auto& s : parts) sum.push_back(summand_json(s));
  return Json{{"sum", sum}};
}

ExactValue exact_value_from_json(const Json& j) {
  if (j.is_object() && j.contains("sum")) {
    ExactValue v;
    for (const Json& s : j.at("sum")) v += ExactValue::from_summand(summand_from_json(s));
    return v;
  }
  return ExactValue::from_summand(summand_from_json(j));
}

Json to_json(const KappaSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_json(c));
  return out;
}

std::string format_complex(const Complex& z, int digits) {
  char buf[128];
  long double re = z.real(), im = z.imag();
  if (re == 0) re = 0;  // drop negative zero
  if (im == 0) im = 0;
  std::snprintf(buf, sizeof buf, "%.*Lg%s%.*Lgi", digits, re, im < 0 ? "-" : "+", digits, im < 0 ? -im : im);
  return buf;
}

}  // namespace spinnet
