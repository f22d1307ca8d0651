// Copyright 2026 The zetalab Authors
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

#ifndef ZETALAB_EXACT_HPP
#define ZETALAB_EXACT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zetalab {

// Unbounded exact integers and rationals. GMP keeps zero canonical and
// mpq_class values are normalized by make_rational / arithmetic.
using ExactInteger = mpz_class;
using ExactRational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
// Throws DomainError when den == 0.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

// Parses "a/b", "a" or "-a/b".
ExactRational parse_rational(std::string_view text);

std::string to_string(const ExactInteger& v);
std::string to_string(const ExactRational& v);

ExactInteger binomial(unsigned long n, unsigned long k);
ExactInteger factorial(unsigned long n);

/// Bernoulli number B_m for even m >= 0, with the convention B_1 = -1/2
/// (B_2 = 1/6, B_4 = -1/30). Values are memoized process-wide behind a mutex.
ExactRational bernoulli(long m);

/// Euler (secant) number E_m for even m >= 0: E_0 = 1, E_2 = -1, E_4 = 5.
ExactInteger euler_number(long m);

} // namespace zetalab

#endif // ZETALAB_EXACT_HPP
