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

#include "zetalab/approx_seq.hpp"
#include "zetalab/error.hpp"
#include "zetalab/lseries.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace zetalab;

namespace {

const PrecisionContext kCtx{};

bool close(const RealBall& a, const RealBall& b, double tol)
{
    return std::abs((a - b).mid_double()) < tol && a.overlaps(b);
}

} // namespace

TEST_CASE("targets")
{
    CHECK(close(inv_L(3, kCtx), beta_odd_closed(1, kCtx).as_ball.recip(), 1e-70));
    CHECK(close(target_Z(2, kCtx), zeta_even_closed(1, kCtx).as_ball * beta(2, kCtx), 1e-70));
    CHECK((inv_L(5, kCtx) * beta(5, kCtx)).contains(ExactRational(1)));
    const ApproxProblem p = zeta_problem(3, kCtx);
    CHECK(p.name == "zeta");
    CHECK(close(p.z * p.inv, p.target, 1e-70));
    CHECK_THROWS_AS(mirror_problem(3, kCtx), DomainError);
}

TEST_CASE("distance to (p_n/q_n) Z")
{
    const DistanceReport r = verify_eq10(3, 8, {}, kCtx);
    REQUIRE(r.rows.size() == 8);
    for (const auto& row : r.rows) {
        CHECK(row.positive == Verdict::True);
        CHECK(row.scaled.upper() <= r.c2);
    }
    CHECK(r.indeterminate == 0);
    CHECK(r.c2 > 0);
    CHECK(r.c2 < 2);

    const DistanceReport one = verify_eq10(3, 1, {}, kCtx);
    REQUIRE(one.rows.size() == 1);
    CHECK(one.c2 == one.rows[0].scaled.upper());

    const std::array<std::uint64_t, 2> xs{1000, 10000};
    const DistanceReport fin = verify_eq10(3, 4, xs, kCtx);
    CHECK(fin.finite_rows.size() == 2 * 4);
}

TEST_CASE("case 1: a hypothetical rational value is contradicted")
{
    const Case1Report a = case1_experiment(3, ExactRational(6, 5), 1, 20, kCtx);
    CHECK(a.c3 == ExactRational(1, 5));
    CHECK(a.threshold == a.c2 * ExactRational(a.z_conv.q) / a.c3);
    REQUIRE(a.crossover_index.has_value());
    REQUIRE(a.predicted_index.has_value());
    CHECK(*a.crossover_index == *a.predicted_index);
    for (bool ok : a.lower_bound_exact) {
        CHECK(ok);
    }

    const Case1Report b = case1_experiment(3, ExactRational(601, 500), 1, 20, kCtx);
    REQUIRE(b.crossover_index.has_value());
    CHECK(*b.crossover_index > *a.crossover_index);
    CHECK(b.threshold / a.threshold == ExactRational(100) * b.c2 / a.c2);
}

TEST_CASE("combined sequence formula")
{
    const CombinedRun one = build_combined(3, 1, 1, 1, kCtx);
    REQUIRE(one.entries.size() == 1);
    CHECK(one.entries[0].r == 2);
    CHECK(one.entries[0].s == 1);
    CHECK(one.entries[0].identity_holds);

    const CombinedRun run = build_combined(3, 10, 10, 3, kCtx);
    REQUIRE(run.entries.size() == 100);
    for (const auto& e : run.entries) {
        const ExactRational rhs = (e.z_conv.value() + make_rational(e.c4, e.z_conv.q * e.z_conv.q)) *
                                  e.inv_conv.value();
        REQUIRE(make_rational(e.r, e.s) == rhs);
        REQUIRE(e.identity_holds);
        REQUIRE(e.nonvanishing == Verdict::True);
    }
    CHECK_THROWS_AS(build_combined(3, 2, 2, 0, kCtx), DomainError);
}

TEST_CASE("diagonal errors decrease")
{
    const CombinedRun run = build_combined(3, 8, 8, 1, kCtx);
    const auto d = diagonal(run);
    REQUIRE(d.size() == 8);
    for (std::size_t i = 1; i < 6; ++i) {
        CHECK(compare_to_rational(d[i].err, d[i - 1].err.lower()) == Comparison::CertainlyLess);
    }
}

TEST_CASE("sandwich crossover on a fixed row")
{
    const CombinedRun run = build_combined(3, 6, 16, 1, kCtx);
    const SandwichReport r = verify_eq15_16(run, 1, kCtx);
    CHECK(r.b == run.z_convs[1].q);
    CHECK(r.c5 > 0);
    REQUIRE(r.crossover_index.has_value());
    REQUIRE(r.predicted_index.has_value());
    CHECK(*r.crossover_index == *r.predicted_index);
    CHECK(r.threshold * r.c5 == r.c2 * ExactRational(r.b * r.b));

    const SandwichReport r3 = verify_eq15_16(run, 3, kCtx);
    CHECK(r3.threshold > r.threshold);

    const CombinedRun single = build_combined(3, 3, 1, 1, kCtx);
    const SandwichReport s = verify_eq15_16(single, 1, kCtx);
    CHECK_FALSE(s.crossover_index.has_value());
    CHECK_THROWS_AS(verify_eq15_16(run, 99, kCtx), DomainError);
}

TEST_CASE("mirror run for Catalan's constant")
{
    const MirrorResult m = beta_mirror(2, 8, 1, 1, kCtx);
    CHECK(m.run.problem.name == "beta_mirror");
    CHECK(close(m.run.problem.target, beta(2, kCtx), 1e-70));
    CHECK(std::abs(m.run.problem.inv.mid_double() - 6 / (M_PI * M_PI)) < 1e-15);
    CHECK(m.run.inv_convs[1].value() == 1);
    // Eight convergents end at q_7 = 227 for 6/pi^2, so the last diagonal
    // error sits near 1/q_7^2 scale; one more convergent brings it under 1e-6.
    const auto d = diagonal(m.run);
    CHECK(d.back().err.upper() < ExactRational(1, 100000));
    for (const auto& e : d) {
        const ExactInteger b2 = e.z_conv.q * e.z_conv.q;
        CHECK(e.err.upper() <= make_rational(1, e.inv_conv.q * e.inv_conv.q) * m.run.problem.z.upper() +
                                   make_rational(1, b2) * (1 + e.inv_conv.value()));
    }
    CHECK(diagonal(beta_mirror(2, 9, 1, 1, kCtx).run).back().err.upper() < ExactRational(1, 1000000));
    for (const auto& e : m.run.entries) {
        REQUIRE(e.identity_holds);
    }
    CHECK_THROWS_AS(beta_mirror(3, 4, 1, 1, kCtx), DomainError);
}

TEST_CASE("fitted error constant is stable in depth")
{
    const double c6 = build_combined(3, 6, 6, 1, kCtx).fitted_error_constant.mid_double();
    const double c8 = build_combined(3, 8, 8, 1, kCtx).fitted_error_constant.mid_double();
    CHECK(c8 / c6 < 1.2);
    CHECK(c8 / c6 > 1 / 1.2);
}

TEST_CASE("property: convergents are unchanged by precision doubling")
{
    const CombinedRun a = build_combined(3, 8, 8, 1, kCtx);
    const CombinedRun b = build_combined(3, 8, 8, 1, kCtx.doubled());
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        REQUIRE(a.entries[i].r == b.entries[i].r);
        REQUIRE(a.entries[i].s == b.entries[i].s);
        REQUIRE(a.entries[i].err.contains(b.entries[i].err));
    }
}

TEST_CASE("precision exhaustion is reported, not hidden")
{
    // 64 bits cannot resolve 200 partial quotients of 1/L(3).
    const CombinedRun run = build_combined(3, 2, 200, 1, PrecisionContext(64));
    CHECK(run.inv_convs.size() < 200);
    CHECK_FALSE(run.warnings.empty());
}
