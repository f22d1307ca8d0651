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

#include "zetalab/dirichlet.hpp"

#include "zetalab/error.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace zetalab {

namespace {

bool squarefree(long m)
{
    m = std::labs(m);
    for (long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

long mod4(long v) { return ((v % 4) + 4) % 4; }

bool is_fundamental(long d)
{
    if (d == 0 || d == 1) {
        return false;
    }
    if (mod4(d) == 1) {
        return squarefree(d);
    }
    if (mod4(d) == 0) {
        const long m = d / 4;
        return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
    }
    return false;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

} // namespace

DirichletCharacter DirichletCharacter::from_discriminant(long discriminant)
{
    if (!is_fundamental(discriminant)) {
        throw UnsupportedModulusError("not a fundamental discriminant: " + std::to_string(discriminant));
    }
    const long q = std::labs(discriminant);
    std::vector<int> table(q);
    const mpz_class d(discriminant);
    for (long n = 0; n < q; ++n) {
        table[n] = mpz_kronecker(d.get_mpz_t(), mpz_class(n).get_mpz_t());
    }
    return DirichletCharacter(discriminant, std::move(table));
}

int chi4(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("chi4: n must be >= 1");
    }
    if (n % 2 == 0) {
        return 0;
    }
    return n % 4 == 1 ? 1 : -1;
}

DirichletCharacter quadratic_character(long q)
{
    if (q < 2) {
        throw UnsupportedModulusError("quadratic_character: modulus must be >= 2");
    }
    const bool neg = is_fundamental(-q);
    const bool pos = is_fundamental(q);
    if (neg == pos) {
        throw UnsupportedModulusError("unsupported modulus " + std::to_string(q) +
                                      (neg ? " (two real primitive characters)" : ""));
    }
    return DirichletCharacter::from_discriminant(neg ? -q : q);
}

long r_divisor(std::uint64_t n, const DirichletCharacter& chi)
{
    if (n == 0) {
        throw DomainError("r_divisor: n must be >= 1");
    }
    long sum = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        sum += chi(d);
        if (d * d != n) {
            sum += chi(n / d);
        }
    }
    return sum;
}

std::vector<std::int32_t> r_divisor_table(std::uint64_t max_n, const DirichletCharacter& chi)
{
    std::vector<std::int32_t> r(max_n + 1, 0);
    for (std::uint64_t d = 1; d <= max_n; ++d) {
        const int c = chi(d);
        if (c == 0) {
            continue;
        }
        for (std::uint64_t m = d; m <= max_n; m += d) {
            r[m] += c;
        }
    }
    return r;
}

std::uint64_t r_lattice(std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("r_lattice: n must be >= 1");
    }
    std::uint64_t count = 0;
    const std::uint64_t root = isqrt(n);
    for (std::uint64_t a = 0; a <= root; ++a) {
        const std::uint64_t rest = n - a * a;
        const std::uint64_t b = isqrt(rest);
        if (b * b != rest) {
            continue;
        }
        // Signs of a and b; zero coordinates have one sign only.
        count += (a == 0 ? 1 : 2) * (b == 0 ? 1 : 2);
    }
    return count;
}

} // namespace zetalab
