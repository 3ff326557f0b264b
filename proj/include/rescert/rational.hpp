// Copyright 2026 The Authors.
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

#ifndef RESCERT_RATIONAL_HPP_
#define RESCERT_RATIONAL_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rescert {

// GMP keeps mpq_class canonical (positive denominator, reduced) after every
// arithmetic operation; parse_rational canonicalizes on input.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" with decimal integers. Throws InputError on
/// malformed text or a zero denominator ("zero denominator").
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// The value reduced into [0, 1).
Rational fractional_part(const Rational& value);

bool is_integer(const Rational& value);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> values);

/// Scales a nonzero vector by a positive rational so that the entries become
/// coprime integers. The zero vector is returned unchanged.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);

}  // namespace rescert

#endif  // RESCERT_RATIONAL_HPP_
