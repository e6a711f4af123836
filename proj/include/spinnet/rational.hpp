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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinnet {

using Integer = mpz_class;

/** mpq_class that is always in lowest terms. */
class Rational : public mpq_class {
 public:
  Rational() = default;
  Rational(int n) : mpq_class(n) {}            // NOLINT
  Rational(long n) : mpq_class(n) {}           // NOLINT
  Rational(const Integer& n) : mpq_class(n) {}  // NOLINT
  Rational(long n, long d) : mpq_class(n, d) { canonicalize(); }
  Rational(const Integer& n, const Integer& d) : mpq_class(n, d) { canonicalize(); }
  Rational(const mpq_class& q) : mpq_class(q) { canonicalize(); }  // NOLINT
  template <class T, class U>
  Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}  // NOLINT
  template <class T, class U>
  Rational& operator=(const __gmp_expr<T, U>& e) {
    mpq_class::operator=(e);
    return *this;
  }
};

/** Raised when a value cannot be held exactly by the scalar types. */
class RepresentationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Accepts "a", "-a" and "a/b"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Integer floor_of(const Rational& r);
// r - floor(r), in [0, 1)
Rational frac_part(const Rational& r);
bool is_integer(const Rational& r);
long to_long(const Rational& r);
long double to_long_double(const Rational& r);

Rational rational_pow(const Rational& base, long exponent);

}  // namespace spinnet
