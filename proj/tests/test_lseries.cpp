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

#include "oracles.hpp"

#include "zetalab/dirichlet.hpp"
#include "zetalab/error.hpp"
#include "zetalab/lseries.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace zetalab;

namespace {

const PrecisionContext kCtx{};

// Catalan's constant, 40 digits, as tabulated in the literature.
const ExactRational kCatalan40 = parse_rational("9159655941772190150546035149323841107741/10000000000000000000000000000000000000000");

bool close(const RealBall& a, const RealBall& b, double tol)
{
    return std::abs((a - b).mid_double()) < tol && a.overlaps(b);
}

} // namespace

TEST_CASE("zeta at even arguments matches the Bernoulli closed form")
{
    for (long n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const ClosedFormValue c = zeta_even_closed(n, kCtx);
        CHECK(c.pi_power == 2 * n);
        CHECK(c.rational_part > 0);
        CHECK(close(zeta(2 * n, kCtx), c.as_ball, 1e-70));
    }
    CHECK(zeta_even_closed(1, kCtx).rational_part == ExactRational(1, 6));
    CHECK(zeta_even_closed(2, kCtx).rational_part == ExactRational(1, 90));
    for (long n = 1; n <= 10; ++n) {
        CHECK(zeta_even_closed(n, kCtx).rational_part > 0);
    }
}

TEST_CASE("zeta(3) against the central binomial series")
{
    const auto [value, err] = oracle::zeta3(80);
    const RealBall z = zeta(3, kCtx);
    CHECK(z.overlaps(RealBall::from_rational(kCtx, value, err)));
    CHECK(z.certified_fixed(14) == "1.20205690315959");
}

TEST_CASE("zeta domain")
{
    CHECK_THROWS_AS(zeta(1, kCtx), DomainError);
    CHECK_THROWS_AS(zeta(0, kCtx), DomainError);
}

TEST_CASE("beta(2) is Catalan's constant")
{
    const RealBall b = beta(2, kCtx);
    CHECK(b.certified_fixed(12) == "0.915965594177");
    CHECK(b.overlaps(RealBall::from_rational(kCtx, kCatalan40, ExactRational(1, 1) / ExactRational(ExactInteger(10) * ExactInteger("1000000000000000000000000000000000000000")))));
}

TEST_CASE("beta at odd arguments matches the Euler-number closed form")
{
    CHECK(beta_odd_closed(0, kCtx).rational_part == ExactRational(1, 4));
    CHECK(beta_odd_closed(1, kCtx).rational_part == ExactRational(1, 32));
    CHECK(beta_odd_closed(2, kCtx).rational_part == ExactRational(5, 1536));
    CHECK(close(beta(1, kCtx), pi(kCtx) * RealBall::from_rational(kCtx, ExactRational(1, 4)), 1e-70));
    for (long n = 0; n <= 5; ++n) {
        CAPTURE(n);
        const ClosedFormValue c = beta_odd_closed(n, kCtx);
        CHECK(c.pi_power == 2 * n + 1);
        CHECK(close(beta(2 * n + 1, kCtx), c.as_ball, 1e-70));
    }
}

TEST_CASE("alternating acceleration and Hurwitz summation agree")
{
    for (long s = 2; s <= 7; ++s) {
        CAPTURE(s);
        const RealBall h = (hurwitz_zeta(s, ExactRational(1, 4), kCtx) -
                            hurwitz_zeta(s, ExactRational(3, 4), kCtx)) *
                           RealBall::from_integer(kCtx, 4).pow(-s);
        CHECK(close(beta(s, kCtx), h, 1e-60));
        CHECK(close(zeta(s, kCtx), hurwitz_zeta(s, ExactRational(1), kCtx), 1e-60));
    }
}

TEST_CASE("beta for other quadratic characters")
{
    // L(2, chi_-3) = 0.78130241289648629686...
    const RealBall l = beta(2, quadratic_character(3), kCtx);
    CHECK(std::abs(l.mid_double() - 0.7813024128964862968671871) < 1e-15);
    CHECK_THROWS_AS(beta(1, quadratic_character(3), kCtx), DomainError);
}

TEST_CASE("dedekind product")
{
    const RealBall d2 = dedekind_product(2, kCtx);
    CHECK(close(d2, zeta_even_closed(1, kCtx).as_ball * beta(2, kCtx), 1e-70));
    CHECK(close(dedekind_product(3, kCtx), zeta(3, kCtx) * beta_odd_closed(1, kCtx).as_ball, 1e-70));
    // (1/4) sum r_lattice(n)/n^2 up to x, against the tail bound.
    const std::uint64_t x = 20000;
    long double sum = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        sum += static_cast<long double>(r_lattice(n)) /
               (static_cast<long double>(n) * n);
    }
    sum /= 4;
    const double gap = std::abs(static_cast<double>(sum) - d2.mid_double());
    CHECK(gap <= summatory_tail_bound(2, x).get_d() + 1e-12);
}

TEST_CASE("summatory small cutoffs")
{
    CHECK(summatory_exact(3, 1) == 1);
    CHECK(summatory_exact(3, 5) == ExactRational(9253, 8000));
    const SummatoryRecord r = summatory(3, 5, kCtx);
    CHECK(r.partial_sum.contains(ExactRational(9253, 8000)));
    const SummatoryRecord big = summatory(4, 3000, kCtx);
    CHECK(big.partial_sum.contains(summatory_exact(4, 3000)));
}

TEST_CASE("summatory deltas stay inside the tail bound")
{
    for (long s = 2; s <= 5; ++s) {
        CAPTURE(s);
        const SummatoryRecord r = summatory(s, 10000, kCtx);
        CHECK(r.delta.mid_double() < 0);
        CHECK(std::abs(r.delta.mid_double()) <= summatory_tail_bound(s, 10000).get_d());
    }
}

TEST_CASE("scaled deltas approach -pi / (4 (s - 1))")
{
    const std::array<std::uint64_t, 3> xs{1000, 10000, 100000};
    const SummatoryExperiment e3 = lemma6_experiment(3, xs, kCtx);
    REQUIRE(e3.records.size() == 3);
    const double d0 = e3.records[0].scaled_delta.mid_double();
    const double d1 = e3.records[1].scaled_delta.mid_double();
    const double d2 = e3.records[2].scaled_delta.mid_double();
    CHECK(std::abs(d1 - d0) / std::abs(d1) < 0.10);
    CHECK(std::abs(d2 - d1) / std::abs(d2) < 0.10);
    CHECK(std::abs(d2 - d1) < std::abs(d1 - d0));
    CHECK(std::abs(d1 + M_PI / 8) / (M_PI / 8) < 0.05);
    CHECK_FALSE(e3.c0_positive);

    const std::array<std::uint64_t, 2> two{1000, 10000};
    const SummatoryExperiment e2 = lemma6_experiment(2, two, kCtx);
    for (const auto& r : e2.records) {
        CHECK(std::abs(r.scaled_delta.mid_double() + M_PI / 4) / (M_PI / 4) < 0.10);
    }
    const SummatoryExperiment e4 = beta_summatory_experiment(4, two, kCtx);
    CHECK(std::abs(e4.fitted_c0.mid_double() + M_PI / 12) / (M_PI / 12) < 0.10);
    CHECK_FALSE(e4.c0_positive);
    CHECK(e4.name == "beta_summatory");
}

TEST_CASE("beta summatory experiment reproduces the lemma table")
{
    const std::array<std::uint64_t, 2> xs{500, 5000};
    const SummatoryExperiment a = lemma6_experiment(2, xs, kCtx);
    const SummatoryExperiment b = beta_summatory_experiment(2, xs, kCtx);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].partial_sum.mid_exact() == b.records[i].partial_sum.mid_exact());
        CHECK(a.records[i].delta.mid_exact() == b.records[i].delta.mid_exact());
    }
}

TEST_CASE("experiment input validation")
{
    const std::array<std::uint64_t, 1> one{1000};
    const std::array<std::uint64_t, 2> small{10, 1000};
    const std::array<std::uint64_t, 2> unsorted{10000, 1000};
    CHECK_THROWS_AS(lemma6_experiment(3, one, kCtx), DomainError);
    CHECK_THROWS_AS(lemma6_experiment(3, small, kCtx), DomainError);
    CHECK_THROWS_AS(lemma6_experiment(3, unsorted, kCtx), DomainError);
    CHECK_THROWS_AS(lemma6_experiment(1, std::array<std::uint64_t, 2>{1000, 2000}, kCtx), DomainError);
}

TEST_CASE("finite Euler products")
{
    CHECK(euler_product_inv_zeta(2, 10, kCtx).contains(ExactRational(768, 1225)));
    CHECK(euler_product_inv_zeta(3, 2, kCtx).contains(ExactRational(7, 8)));
    const RealBall p = euler_product_inv_zeta(2, 10000, kCtx);
    CHECK(std::abs((p - zeta(2, kCtx).recip()).mid_double()) < 1e-4);
    CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("property: closed forms are stable under precision doubling")
{
    const PrecisionContext lo(128);
    for (long s = 2; s <= 8; ++s) {
        CAPTURE(s);
        CHECK(zeta(s, lo).contains(zeta(s, lo.doubled())));
        CHECK(beta(s, lo).contains(beta(s, lo.doubled())));
    }
}
