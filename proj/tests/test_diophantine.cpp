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

#include "zetalab/diophantine.hpp"
#include "zetalab/error.hpp"
#include "zetalab/lseries.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace zetalab;

namespace {

const PrecisionContext kCtx{};

std::vector<ExactInteger> ints(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

// Convergents by evaluating each truncated continued fraction bottom-up,
// rather than by the forward recurrence.
ExactRational evaluate_truncation(const std::vector<ExactInteger>& a, std::size_t n)
{
    ExactRational v = a[n];
    for (std::size_t i = n; i-- > 0;) {
        v = ExactRational(a[i]) + 1 / v;
    }
    return v;
}

} // namespace

TEST_CASE("continued fractions of rationals")
{
    const CFExpansion a = cf_expand(ExactRational(355, 113), 50);
    CHECK(a.partial_quotients == ints({3, 7, 16}));
    CHECK(a.termination == Termination::ExactTermination);
    const CFExpansion b = cf_expand(ExactRational(5), 50);
    CHECK(b.partial_quotients == ints({5}));
    CHECK(b.termination == Termination::ExactTermination);
    const CFExpansion c = cf_expand(ExactRational(355, 113), 2);
    CHECK(c.partial_quotients == ints({3, 7}));
    CHECK(c.termination == Termination::MaxTerms);
    CHECK(cf_expand(ExactRational(-7, 3), 10).partial_quotients == ints({-3, 1, 2}));
}

TEST_CASE("continued fraction of pi")
{
    const auto [value, err] = oracle::pi(60);
    const CFExpansion oracle_cf = cf_expand(value, 5);
    CHECK(oracle_cf.partial_quotients == ints({3, 7, 15, 1, 292}));
    const CFExpansion cf = cf_expand(pi(kCtx), 5);
    CHECK(cf.partial_quotients == oracle_cf.partial_quotients);

    // At 256 bits the ball determines many more terms; they must agree with
    // Euclid on the 100-digit oracle rational as far as both go.
    const CFExpansion long_cf = cf_expand(pi(kCtx), 1000);
    CHECK(long_cf.termination == Termination::PrecisionExhausted);
    CHECK(long_cf.partial_quotients.size() > 60);
    const auto [fine, fine_err] = oracle::pi(140);
    const CFExpansion fine_cf = cf_expand(fine, long_cf.partial_quotients.size());
    for (std::size_t i = 0; i < long_cf.partial_quotients.size(); ++i) {
        REQUIRE(long_cf.partial_quotients[i] == fine_cf.partial_quotients[i]);
    }
}

TEST_CASE("convergents")
{
    CFExpansion cf;
    cf.partial_quotients = ints({3, 7, 16});
    const auto c = convergents(cf);
    REQUIRE(c.size() == 3);
    CHECK(c[0].value() == 3);
    CHECK(c[1].value() == ExactRational(22, 7));
    CHECK(c[2].value() == ExactRational(355, 113));
    CHECK(c[1].index == 1);
    CHECK_THROWS_AS(convergents(CFExpansion{}), DomainError);
}

TEST_CASE("property: convergents match bottom-up evaluation and the determinant identity")
{
    const CFExpansion cf = cf_expand(zeta(3, kCtx), 80);
    const auto c = convergents(cf);
    for (std::size_t n = 0; n < c.size(); ++n) {
        REQUIRE(c[n].value() == evaluate_truncation(cf.partial_quotients, n));
        if (n > 0) {
            const ExactInteger det = c[n].p * c[n - 1].q - c[n - 1].p * c[n].q;
            REQUIRE(det == ((n % 2 == 1) ? 1 : -1)); // (-1)^(n-1)
            REQUIRE(c[n].q > c[n - 1].q);
        }
    }
}

TEST_CASE("property: convergents alternate around the target")
{
    const RealBall x = beta(2, kCtx);
    const auto c = convergents(cf_expand(x, 60));
    for (const auto& conv : c) {
        const Comparison cmp = compare_to_rational(x, conv.value());
        REQUIRE(cmp == (conv.index % 2 == 0 ? Comparison::CertainlyGreater : Comparison::CertainlyLess));
    }
}

TEST_CASE("property: rational round trip")
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long> num(-100000000, 100000000);
    std::uniform_int_distribution<long> den(1, 100000000);
    for (int i = 0; i < 500; ++i) {
        const ExactRational x = make_rational(num(rng), den(rng));
        const CFExpansion cf = cf_expand(x, 1000);
        REQUIRE(cf.termination == Termination::ExactTermination);
        REQUIRE(convergents(cf).back().value() == x);
    }
}

TEST_CASE("property: terms found at working precision survive re-expansion at doubled precision")
{
    for (long s : {3L, 5L}) {
        const CFExpansion lo = cf_expand(zeta(s, kCtx), 500);
        const CFExpansion hi = cf_expand(zeta(s, kCtx.doubled()), 500);
        REQUIRE(hi.partial_quotients.size() > lo.partial_quotients.size());
        for (std::size_t i = 0; i < lo.partial_quotients.size(); ++i) {
            REQUIRE(lo.partial_quotients[i] == hi.partial_quotients[i]);
        }
    }
}

TEST_CASE("exact ball expands like the rational")
{
    const RealBall half = RealBall::from_rational(kCtx, ExactRational(1, 2));
    const CFExpansion cf = cf_expand(half, 10);
    CHECK(cf.partial_quotients == ints({0, 2}));
    CHECK(cf.termination == Termination::ExactTermination);
}

TEST_CASE("dirichlet_check")
{
    Convergent c{1, 22, 7};
    CHECK(dirichlet_check(pi(kCtx), c) == Verdict::True);
    const RealBall half = RealBall::from_rational(kCtx, ExactRational(1, 2));
    CHECK(dirichlet_check(half, Convergent{1, 1, 2}) == Verdict::True);
    // 1/3 is not within 1/4 of 0.9, so this pair fails.
    CHECK(dirichlet_check(RealBall::from_rational(kCtx, ExactRational(9, 10)), Convergent{1, 1, 2}) ==
          Verdict::False);

    const RealBall z3 = zeta(3, kCtx);
    const auto convs = convergents(cf_expand(z3, 1000));
    const RealBall z3_fine = zeta(3, kCtx.doubled());
    for (const auto& conv : convs) {
        REQUIRE(dirichlet_check(z3, conv) != Verdict::False);
        REQUIRE(dirichlet_check(z3_fine, conv) == Verdict::True);
    }
}

TEST_CASE("rationality lower bound")
{
    CHECK(rationality_lower_bound_check(ExactRational(355, 113), 3, 1));
    CHECK(rationality_lower_bound_check(ExactRational(1, 3), 1, 2));
    CHECK_THROWS_AS(rationality_lower_bound_check(ExactRational(1, 2), 2, 4), DomainError);
    CHECK_THROWS_AS(rationality_lower_bound_check(ExactRational(1, 2), 1, 0), DomainError);
    const ExactRational x(22, 7);
    for (long q = 1; q <= 100; ++q) {
        for (long p = 2 * q; p <= 5 * q; ++p) {
            if (make_rational(p, q) == x) {
                continue;
            }
            REQUIRE(rationality_lower_bound_check(x, p, q));
        }
    }
}

TEST_CASE("irrationality exponent scan")
{
    const RealBall half = RealBall::from_rational(kCtx, ExactRational(1, 2));
    const std::vector<Convergent> hc{{0, 0, 1}, {1, 1, 2}};
    const IrrationalityScan hs = irrationality_criterion_scan(half, hc, 1.0);
    CHECK(hs.witnessed == 0);
    CHECK(hs.skipped == 2);

    const auto pc = convergents(cf_expand(pi(kCtx), 3));
    const IrrationalityScan ps = irrationality_criterion_scan(pi(kCtx), pc, 0.1);
    REQUIRE(ps.entries.size() == 3);
    const double expected = -std::log(std::abs(M_PI - 22.0 / 7.0)) / std::log(7.0);
    CHECK(ps.entries[1].exponent_lo == doctest::Approx(expected).epsilon(1e-9));
    CHECK(ps.entries[1].exponent_lo == doctest::Approx(3.429).epsilon(1e-3));

    const RealBall z3 = zeta(3, kCtx);
    const auto zc = convergents(cf_expand(z3, 11));
    const IrrationalityScan zs = irrationality_criterion_scan(z3, zc, 0.1);
    CHECK(zs.witnessed == 10); // q_0 = 1 is skipped
    CHECK(zs.skipped == 1);
    CHECK_THROWS_AS(irrationality_criterion_scan(z3, zc, 0.0), DomainError);
}

TEST_CASE("mu estimates")
{
    CFExpansion tens;
    tens.partial_quotients = ints({0, 10, 10, 10});
    const auto m = mu_estimate(convergents(tens));
    REQUIRE(!m.empty());
    CHECK(m.front().index == 1);
    CHECK(m.front().mu == doctest::Approx(1 + std::log(101.0) / std::log(10.0)));
    CHECK(m.front().mu == doctest::Approx(3.004).epsilon(1e-3));

    CFExpansion golden;
    golden.partial_quotients.assign(60, 1);
    const auto g = mu_estimate(convergents(golden));
    CHECK(g.back().mu == doctest::Approx(2.0).epsilon(0.02));

    const auto z = convergents(cf_expand(zeta(3, kCtx), 12));
    const std::vector<Convergent> tail(z.begin() + 1, z.end());
    CHECK(mu_estimate(tail).size() == tail.size() - 1);
    CHECK_THROWS_AS(mu_estimate(std::span<const Convergent>(tail.data(), 1)), DomainError);
}
