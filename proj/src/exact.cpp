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

#include "zetalab/exact.hpp"

#include "zetalab/error.hpp"

#include <mutex>
#include <vector>

namespace zetalab {

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    ExactRational r(num, den);
    r.canonicalize();
    return r;
}

ExactRational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        ExactInteger v;
        if (part.empty() || v.set_str(std::string(part), 10) != 0) {
            throw DomainError("malformed rational: '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactRational(parse_int(text));
    }
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const ExactInteger& v) { return v.get_str(10); }

std::string to_string(const ExactRational& v) { return v.get_str(10); }

ExactInteger binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        throw DomainError("binomial: k > n");
    }
    ExactInteger r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

ExactInteger factorial(unsigned long n)
{
    ExactInteger r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace {

void require_even_index(long m, const char* what)
{
    if (m < 0 || m % 2 != 0) {
        throw DomainError(std::string(what) + ": index must be even and non-negative");
    }
}

// Full Bernoulli table B_0..B_m (odd entries included, B_1 = -1/2) from
// sum_{j=0}^{m} C(m+1, j) B_j = 0.
struct BernoulliTable {
    std::mutex mutex;
    std::vector<ExactRational> values{ExactRational(1)};

    ExactRational get(long m)
    {
        std::lock_guard lock(mutex);
        while (static_cast<long>(values.size()) <= m) {
            const unsigned long k = values.size();
            if (k > 1 && k % 2 == 1) {
                values.emplace_back(0);
                continue;
            }
            ExactRational acc(0);
            for (unsigned long j = 0; j < k; ++j) {
                if (j > 1 && j % 2 == 1) {
                    continue;
                }
                acc += ExactRational(binomial(k + 1, j)) * values[j];
            }
            ExactRational b = -acc / ExactRational(k + 1);
            b.canonicalize();
            values.push_back(b);
        }
        return values[m];
    }
};

// Secant numbers from sum_{k even <= m} C(m, k) E_k = 0, stored by half index.
struct EulerTable {
    std::mutex mutex;
    std::vector<ExactInteger> values{ExactInteger(1)};

    ExactInteger get(long m)
    {
        std::lock_guard lock(mutex);
        while (static_cast<long>(values.size()) <= m / 2) {
            const unsigned long n = 2 * values.size();
            ExactInteger acc(0);
            for (unsigned long k = 0; k < n; k += 2) {
                acc += binomial(n, k) * values[k / 2];
            }
            values.push_back(-acc);
        }
        return values[m / 2];
    }
};

BernoulliTable& bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

EulerTable& euler_table()
{
    static EulerTable table;
    return table;
}

} // namespace

ExactRational bernoulli(long m)
{
    require_even_index(m, "bernoulli");
    return bernoulli_table().get(m);
}

ExactInteger euler_number(long m)
{
    require_even_index(m, "euler_number");
    return euler_table().get(m);
}

} // namespace zetalab
