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

// Independent reference computations for the test suites. None of these call
// into the library; they use textbook algorithms that differ from the ones
// the library implements.

#ifndef ZETALAB_TESTS_ORACLES_HPP
#define ZETALAB_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

namespace oracle {

// Akiyama-Tanigawa; yields B_1 = +1/2, the even indices are the usual ones.
inline mpq_class bernoulli(int m)
{
    std::vector<mpq_class> a(m + 1);
    for (int i = 0; i <= m; ++i) {
        a[i] = mpq_class(1, i + 1);
        for (int j = i; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    return a[0];
}

// Seidel boustrophedon for the zigzag numbers; E_{2n} = (-1)^n zigzag(2n).
inline mpz_class euler_number(int m)
{
    if (m % 2 != 0) {
        return 0;
    }
    std::vector<mpz_class> row{1};
    std::vector<mpz_class> zigzag{1};
    for (int n = 1; n <= m; ++n) {
        std::vector<mpz_class> next(n + 1);
        if (n % 2 == 1) {
            next[0] = 0;
            for (int k = 1; k <= n; ++k) {
                next[k] = next[k - 1] + row[k - 1];
            }
            zigzag.push_back(next[n]);
        } else {
            next[n] = 0;
            for (int k = n - 1; k >= 0; --k) {
                next[k] = next[k + 1] + row[k];
            }
            zigzag.push_back(next[0]);
        }
        row = std::move(next);
    }
    return (m / 2) % 2 == 0 ? zigzag[m] : mpz_class(-zigzag[m]);
}

inline mpz_class pascal(unsigned n, unsigned k)
{
    std::vector<mpz_class> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<mpz_class> next(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next);
    }
    return k <= n ? row[k] : mpz_class(0);
}

// arctan(1/x) by its Taylor series; returns the partial sum and a bound on
// the omitted tail (the first omitted term).
inline std::pair<mpq_class, mpq_class> atan_inv(long x, int terms)
{
    mpq_class sum = 0;
    mpz_class power = x;
    const mpz_class x2 = mpz_class(x) * x;
    for (int k = 0; k < terms; ++k) {
        mpq_class t(1, 1);
        t /= mpq_class(power * (2 * k + 1));
        sum += (k % 2 == 0) ? t : mpq_class(-t);
        power *= x2;
    }
    mpq_class tail(1, 1);
    tail /= mpq_class(power * (2 * terms + 1));
    return {sum, tail};
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
inline std::pair<mpq_class, mpq_class> pi(int terms = 60)
{
    const auto [a, ea] = atan_inv(5, terms);
    const auto [b, eb] = atan_inv(239, terms);
    return {16 * a - 4 * b, 16 * ea + 4 * eb};
}

// zeta(3) = (5/2) sum_{k>=1} (-1)^{k+1} / (k^3 C(2k,k)); the terms shrink by
// about 4 per step and alternate, so the next term bounds the error.
inline std::pair<mpq_class, mpq_class> zeta3(int terms = 60)
{
    mpq_class sum = 0;
    mpz_class central = 1;
    mpq_class last = 0;
    for (int k = 1; k <= terms + 1; ++k) {
        central = central * (2 * (2 * k - 1)) / k; // C(2k, k)
        mpq_class t(1, 1);
        t /= mpq_class(mpz_class(k) * k * k * central);
        if (k == terms + 1) {
            last = t;
            break;
        }
        sum += (k % 2 == 1) ? t : mpq_class(-t);
    }
    return {mpq_class(5, 2) * sum, mpq_class(5, 2) * last};
}

inline int chi4(std::uint64_t n)
{
    return n % 2 == 0 ? 0 : (n % 4 == 1 ? 1 : -1);
}

// Divisor sum by plain trial of every d <= n.
inline long r_divisor(std::uint64_t n)
{
    long sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            sum += chi4(d);
        }
    }
    return sum;
}

// Lattice points on a^2 + b^2 = n over the full square.
inline std::uint64_t r_lattice(std::uint64_t n)
{
    std::uint64_t count = 0;
    const long lim = 1 + static_cast<long>(n);
    for (long a = -lim; a <= lim; ++a) {
        if (static_cast<std::uint64_t>(a * a) > n) {
            continue;
        }
        for (long b = -lim; b <= lim; ++b) {
            if (static_cast<std::uint64_t>(a * a + b * b) == n) {
                ++count;
            }
        }
    }
    return count;
}

} // namespace oracle

#endif // ZETALAB_TESTS_ORACLES_HPP
