// Copyright 2026 The rbraid Authors
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

namespace rbraid {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (module files, canonical scalars, braid words).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the supported domain (bad rank, non-dominant weight, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "3", "-1/2"
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "a" or "a/b" with optional leading sign; rejects anything else.
Rational parse_rational(std::string_view text);

}  // namespace rbraid
