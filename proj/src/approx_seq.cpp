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

#include <algorithm>
#include <string>

namespace zetalab {

namespace {

ExactRational max_upper(const ExactRational& acc, const RealBall& b)
{
    return std::max(acc, b.upper());
}

// Certified lower bound of a non-negative quantity held in a ball.
ExactRational nonneg_lower(const RealBall& b)
{
    const ExactRational lo = b.lower();
    return lo > 0 ? lo : ExactRational(0);
}

std::vector<Convergent> convergent_stream(const RealBall& x, std::size_t depth,
                                          const std::string& label,
                                          std::vector<std::string>& warnings)
{
    const CFExpansion cf = cf_expand(x, depth);
    if (cf.partial_quotients.empty()) {
        throw PrecisionError("no certified partial quotient for " + label, 2 * x.bits());
    }
    if (cf.partial_quotients.size() < depth) {
        warnings.push_back(label + ": expansion truncated at " +
                           std::to_string(cf.partial_quotients.size()) + " of " +
                           std::to_string(depth) + " terms (" + to_string(cf.termination) + ")");
    }
    return convergents(cf);
}

Verdict certainly_positive(const RealBall& b)
{
    return b.excludes_zero() ? Verdict::True : Verdict::Indeterminate;
}

} // namespace

RealBall target_Z(long s, const PrecisionContext& ctx) { return dedekind_product(s, ctx); }

RealBall inv_L(long s, const PrecisionContext& ctx) { return beta(s, ctx).recip(); }

ApproxProblem zeta_problem(long s, const PrecisionContext& ctx)
{
    if (s < 2) {
        throw DomainError("zeta_problem: s must be >= 2");
    }
    const RealBall z = zeta(s, ctx);
    const RealBall l = beta(s, ctx);
    return {"zeta", s, z, z * l, l.recip()};
}

ApproxProblem mirror_problem(long s, const PrecisionContext& ctx)
{
    if (s < 2 || s % 2 != 0) {
        throw DomainError("mirror_problem: s must be even and >= 2");
    }
    const RealBall z = zeta(s, ctx);
    const RealBall l = beta(s, ctx);
    return {"beta_mirror", s, l, z * l, z.recip()};
}

DistanceReport verify_eq10(const ApproxProblem& problem, std::size_t n_count,
                       std::span<const std::uint64_t> xs, const PrecisionContext& ctx)
{
    if (n_count < 1) {
        throw DomainError("verify_eq10: need at least one convergent");
    }
    DistanceReport report;
    report.problem = problem.name;
    report.s = problem.s;
    std::vector<std::string> warnings;
    const auto convs = convergent_stream(problem.inv, n_count, "inv", warnings);

    ExactRational c2 = 0;
    for (const auto& c : convs) {
        const RealBall approx = RealBall::from_rational(ctx, c.value()) * problem.z;
        const RealBall distance = (problem.target - approx).abs();
        const RealBall scaled = distance * RealBall::from_integer(ctx, c.q * c.q);
        const Verdict positive = certainly_positive(distance);
        if (positive != Verdict::True) {
            ++report.indeterminate;
        }
        c2 = max_upper(c2, scaled);
        report.rows.push_back({c, distance, scaled, positive});
    }
    report.c2 = c2;
    if (report.indeterminate > 0) {
        report.suggested_bits = 2 * ctx.working_bits();
    }

    if (!xs.empty()) {
        const auto records = summatory_many(problem.s, xs, ctx);
        for (const auto& rec : records) {
            for (const auto& c : convs) {
                const RealBall approx = RealBall::from_rational(ctx, c.value()) * rec.partial_sum;
                const RealBall distance = (problem.target - approx).abs();
                report.finite_rows.push_back(
                    {rec.x, c.index, distance, distance * RealBall::from_integer(ctx, c.q * c.q)});
            }
        }
    }
    return report;
}

DistanceReport verify_eq10(long s, std::size_t n_count, std::span<const std::uint64_t> xs,
                       const PrecisionContext& ctx)
{
    return verify_eq10(zeta_problem(s, ctx), n_count, xs, ctx);
}

Case1Report case1_experiment(long s, const ExactRational& hypothesis, long m, std::size_t n_count,
                             const PrecisionContext& ctx)
{
    if (m < 0) {
        throw DomainError("case1_experiment: m must be >= 0");
    }
    if (hypothesis <= 0) {
        throw DomainError("case1_experiment: hypothesis must be positive");
    }
    const ApproxProblem problem = zeta_problem(s, ctx);
    std::vector<std::string> warnings;
    const auto z_convs = convergent_stream(problem.z, static_cast<std::size_t>(m) + 1, "Z", warnings);
    if (static_cast<long>(z_convs.size()) <= m) {
        throw PrecisionError("Z expansion too short for m = " + std::to_string(m),
                             2 * ctx.working_bits());
    }
    const DistanceReport eq10 = verify_eq10(problem, n_count, {}, ctx);

    Case1Report report;
    report.s = s;
    report.hypothesis = hypothesis;
    report.m = m;
    report.z_conv = z_convs[m];
    report.c2 = eq10.c2;
    report.c3 = make_rational(1, hypothesis.get_den());
    const ExactInteger& b = report.z_conv.q;
    report.threshold = report.c2 * ExactRational(b) / report.c3;

    for (const auto& row : eq10.rows) {
        const Convergent& c = row.inv_conv;
        SandwichRow sw;
        sw.n = c.index;
        sw.q = c.q;
        sw.lower = report.c3 / ExactRational(b * c.q);
        sw.upper = report.c2 / ExactRational(c.q * c.q);
        sw.bounds_consistent = sw.lower <= sw.upper ? Verdict::True : Verdict::False;
        if (!report.crossover_index && sw.lower > sw.upper) {
            report.crossover_index = sw.n;
        }
        // q_n c3 > c2 b, cleared of denominators.
        const ExactInteger lhs = c.q * report.c3.get_num() * report.c2.get_den();
        const ExactInteger rhs = report.c2.get_num() * report.c3.get_den() * b;
        if (!report.predicted_index && lhs > rhs) {
            report.predicted_index = sw.n;
        }
        // lower bound 1/(b_m q_n B) on the product approximation, checked exactly.
        const ExactInteger num = report.z_conv.p * c.p;
        const ExactInteger den = b * c.q;
        report.lower_bound_exact.push_back(make_rational(num, den) == hypothesis ||
                                           rationality_lower_bound_check(hypothesis, num, den));
        report.rows.push_back(std::move(sw));
    }
    return report;
}

CombinedRun build_combined(const ApproxProblem& problem, std::size_t depth_m, std::size_t depth_n,
                           const ExactInteger& c4, const PrecisionContext& ctx)
{
    if (depth_m < 1 || depth_n < 1) {
        throw DomainError("build_combined: depths must be >= 1");
    }
    if (c4 < 1) {
        throw DomainError("build_combined: c4 must be >= 1");
    }
    CombinedRun run{problem, {}, {}, c4, {}, {}, RealBall(ctx)};
    run.z_convs = convergent_stream(problem.z, depth_m, "Z", run.warnings);
    run.inv_convs = convergent_stream(problem.inv, depth_n, "inv", run.warnings);

    ExactRational fitted_upper = 0;
    ExactRational fitted_lower = 0;
    for (const auto& zc : run.z_convs) {
        const ExactRational outer = zc.value() + make_rational(c4, zc.q * zc.q);
        for (const auto& ic : run.inv_convs) {
            CombinedApproxEntry e{
                .m = zc.index,
                .n = ic.index,
                .z_conv = zc,
                .inv_conv = ic,
                .c4 = c4,
                .r = zc.p * zc.q * ic.p + c4 * ic.p,
                .s = zc.q * zc.q * ic.q,
                .err = RealBall(ctx),
            };
            const ExactRational approx = make_rational(e.r, e.s);
            e.identity_holds = approx == outer * ic.value();
            e.err = (problem.target - RealBall::from_rational(ctx, approx)).abs();
            e.nonvanishing = certainly_positive(e.err);

            const ExactInteger weight = std::min(zc.q * zc.q, ic.q * ic.q);
            const RealBall scaled = e.err * RealBall::from_integer(ctx, weight);
            fitted_upper = std::max(fitted_upper, scaled.upper());
            fitted_lower = std::max(fitted_lower, nonneg_lower(scaled));
            run.entries.push_back(std::move(e));
        }
    }
    run.fitted_error_constant = RealBall::from_rational(
        ctx, (fitted_upper + fitted_lower) / 2, (fitted_upper - fitted_lower) / 2);
    return run;
}

CombinedRun build_combined(long s, std::size_t depth_m, std::size_t depth_n,
                           const ExactInteger& c4, const PrecisionContext& ctx)
{
    return build_combined(zeta_problem(s, ctx), depth_m, depth_n, c4, ctx);
}

std::vector<CombinedApproxEntry> diagonal(const CombinedRun& run)
{
    std::vector<CombinedApproxEntry> out;
    for (const auto& e : run.entries) {
        if (e.m == e.n) {
            out.push_back(e);
        }
    }
    return out;
}

SandwichReport verify_eq15_16(const CombinedRun& run, long m0, const PrecisionContext& ctx)
{
    std::vector<const CombinedApproxEntry*> row;
    for (const auto& e : run.entries) {
        if (e.m == m0) {
            row.push_back(&e);
        }
    }
    if (row.empty()) {
        throw DomainError("verify_eq15_16: no entries in row m0 = " + std::to_string(m0));
    }

    SandwichReport report;
    report.m0 = m0;
    report.b = row.front()->z_conv.q;
    const ExactInteger b2 = report.b * report.b;

    // c2 comes from the pure inv approximation, as in the bound it feeds.
    ExactRational c2 = 0;
    for (const auto& c : run.inv_convs) {
        const RealBall approx = RealBall::from_rational(ctx, c.value()) * run.problem.z;
        const RealBall distance = (run.problem.target - approx).abs();
        c2 = max_upper(c2, distance * RealBall::from_integer(ctx, c.q * c.q));
    }
    report.c2 = c2;

    bool first = true;
    ExactRational c5 = 0;
    for (const auto* e : row) {
        const ExactRational v = nonneg_lower(e->err) * ExactRational(b2 * e->inv_conv.q);
        c5 = first ? v : std::min(c5, v);
        first = false;
        if (e->nonvanishing != Verdict::True) {
            ++report.indeterminate;
        }
    }
    report.c5 = c5;
    if (c5 > 0) {
        report.threshold = c2 * ExactRational(b2) / c5;
    }

    for (const auto* e : row) {
        const ExactInteger& q = e->inv_conv.q;
        SandwichRow sw;
        sw.n = e->n;
        sw.q = q;
        sw.lower = c5 / ExactRational(b2 * q);
        sw.upper = c2 / ExactRational(q * q);
        sw.bounds_consistent = sw.lower <= sw.upper ? Verdict::True : Verdict::False;

        // Ball route for the bound crossover.
        const RealBall lower_ball = RealBall::from_rational(ctx, c5) /
                                    RealBall::from_integer(ctx, b2 * q);
        const RealBall upper_ball = RealBall::from_rational(ctx, c2) /
                                    RealBall::from_integer(ctx, q * q);
        const RealBall gap = lower_ball - upper_ball;
        if (!report.crossover_index && compare_to_rational(gap, 0) == Comparison::CertainlyGreater) {
            report.crossover_index = sw.n;
        }
        // Integer route: q c5 > c2 b^2 with denominators cleared.
        if (c5 > 0 && !report.predicted_index &&
            q * c5.get_num() * c2.get_den() > c2.get_num() * c5.get_den() * b2) {
            report.predicted_index = sw.n;
        }

        Verdict below;
        switch (compare_to_rational(e->err, sw.upper)) {
        case Comparison::CertainlyLess: below = Verdict::True; break;
        case Comparison::CertainlyGreater: below = Verdict::False; break;
        default: below = Verdict::Indeterminate; break;
        }
        if (!report.data_violation_index && below == Verdict::False) {
            report.data_violation_index = sw.n;
        }
        report.data_below_upper.push_back(below);
        report.rows.push_back(std::move(sw));
    }
    return report;
}

MirrorResult beta_mirror(long s, std::size_t depth, const ExactInteger& c4, long m0,
                         const PrecisionContext& ctx)
{
    CombinedRun run = build_combined(mirror_problem(s, ctx), depth, depth, c4, ctx);
    SandwichReport report = verify_eq15_16(run, m0, ctx);
    return {std::move(run), std::move(report)};
}

} // namespace zetalab
