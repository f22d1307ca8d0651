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

#include "zetalab/verify.hpp"

#include "report.hpp"
#include "zetalab/approx_seq.hpp"
#include "zetalab/diophantine.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/error.hpp"
#include "zetalab/lseries.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace zetalab {

namespace {

struct Outcome {
    CheckOutcome outcome;
    std::string detail;
};

Outcome pass(std::string d) { return {CheckOutcome::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckOutcome::Fail, std::move(d)}; }

ExactRational pow10_neg(unsigned long e)
{
    ExactInteger p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return make_rational(1, p);
}

// 1. Catalan's constant to 12 decimals through the const command path.
Outcome catalan_digits(const PrecisionContext& ctx)
{
    const auto v = report::evaluate_const(report::ConstKind::Beta, 2, 12, ctx);
    const bool digits_ok = v.fixed == "0.915965594177";
    const bool radius_ok = v.value.rad_exact() < pow10_neg(12);
    std::string d = "value=" + v.fixed + " radius=" + v.value.rad_string();
    return digits_ok && radius_ok ? pass(d) : fail(d);
}

// 2. r_lattice(n) = 4 r_divisor(n) for n <= 10^4.
Outcome jacobi_sweep(const PrecisionContext&)
{
    const auto chi = quadratic_character(4);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        if (static_cast<long>(r_lattice(n)) != 4 * r_divisor(n, chi)) {
            return fail("mismatch at n=" + std::to_string(n));
        }
    }
    return pass("n <= 10000 all agree");
}

// 3. Closed forms against the series, certified below 1e-45.
Outcome closed_forms(const PrecisionContext& ctx)
{
    const ExactRational tol = pow10_neg(45);
    std::ostringstream d;
    for (long n = 1; n <= 5; ++n) {
        const RealBall gap = (zeta(2 * n, ctx) - zeta_even_closed(n, ctx).as_ball).abs();
        if (!(gap.upper() < tol)) {
            return fail("zeta(" + std::to_string(2 * n) + ") gap bound " + gap.rad_string());
        }
    }
    for (long n = 0; n <= 4; ++n) {
        const RealBall gap = (beta(2 * n + 1, ctx) - beta_odd_closed(n, ctx).as_ball).abs();
        if (!(gap.upper() < tol)) {
            return fail("L(" + std::to_string(2 * n + 1) + ") gap bound " + gap.rad_string());
        }
    }
    return pass("zeta(2..10 even), L(1..9 odd) within 1e-45");
}

// 4. Partial sums at x = 10^5 against zeta(s) L(s) with the tail bound.
Outcome finite_factorization(const PrecisionContext& ctx)
{
    std::ostringstream d;
    bool ok = true;
    for (long s = 2; s <= 5; ++s) {
        const auto rec = summatory(s, 100000, ctx);
        const ExactRational tail = summatory_tail_bound(s, 100000);
        // delta = partial - product carries both radii.
        const ExactRational mid = rec.delta.mid_exact();
        const ExactRational gap = mid < 0 ? ExactRational(-mid) : mid;
        const bool within = gap <= tail + rec.delta.rad_exact();
        ok = ok && within;
        d << "s=" << s << " |delta|=" << report::decimal(gap.get_d())
          << " tail=" << report::decimal(tail.get_d()) << (within ? " ok; " : " FAIL; ");
    }
    return ok ? pass(d.str()) : fail(d.str());
}

bool within_relative(const RealBall& v, const RealBall& ref, const ExactRational& rel)
{
    // |v - ref| <= rel |ref|, certified on the ball bounds.
    const RealBall gap = (v - ref).abs();
    const RealBall mag = ref.abs();
    return gap.upper() <= rel * mag.lower();
}

// 5. Scaled summatory deltas against -L(1)/(s-1).
Outcome summatory_scaling(const PrecisionContext& ctx)
{
    const std::uint64_t xs[] = {1000, 10000, 100000};
    std::ostringstream d;
    bool ok = true;

    const auto s3 = lemma6_experiment(3, xs, ctx);
    for (std::size_t i = 0; i < s3.records.size(); ++i) {
        for (std::size_t j = i + 1; j < s3.records.size(); ++j) {
            const auto& a = s3.records[i].scaled_delta;
            const auto& b = s3.records[j].scaled_delta;
            // |a - b| <= 10% of the larger magnitude.
            if (!within_relative(a, b, make_rational(1, 10)) &&
                !within_relative(b, a, make_rational(1, 10))) {
                ok = false;
            }
        }
        d << "s=3 x=" << s3.records[i].x << " " << s3.records[i].scaled_delta.mid_string(8) << "; ";
    }
    const bool last_ok = within_relative(s3.records.back().scaled_delta, s3.predicted_c0,
                                         make_rational(5, 100));
    ok = ok && last_ok;

    const auto s2 = lemma6_experiment(2, xs, ctx);
    for (const auto& rec : s2.records) {
        const bool r_ok = within_relative(rec.scaled_delta, s2.predicted_c0, make_rational(1, 10));
        ok = ok && r_ok;
        d << "s=2 x=" << rec.x << " " << rec.scaled_delta.mid_string(8) << (r_ok ? "" : " FAIL") << "; ";
    }
    d << "oracle s=3 " << s3.predicted_c0.mid_string(8) << ", s=2 " << s2.predicted_c0.mid_string(8);
    return ok ? pass(d.str()) : fail(d.str());
}

// 6. Convergent inequality and determinant identity for four constants.
Outcome convergent_property(const PrecisionContext& ctx)
{
    const PrecisionContext fine = ctx.doubled();
    struct Target {
        const char* name;
        std::function<RealBall(const PrecisionContext&)> eval;
    };
    const Target targets[] = {
        {"pi", [](const PrecisionContext& c) { return pi(c); }},
        {"zeta(3)", [](const PrecisionContext& c) { return zeta(3, c); }},
        {"catalan", [](const PrecisionContext& c) { return beta(2, c); }},
        {"1/beta(3)", [](const PrecisionContext& c) { return beta(3, c).recip(); }},
    };
    std::ostringstream d;
    bool ok = true;
    for (const auto& t : targets) {
        const CFExpansion cf = cf_expand(t.eval(ctx), 100000);
        const auto convs = convergents(cf);
        // The inequality is certified on a tighter enclosure of the same real.
        const RealBall x = t.eval(fine);
        std::size_t good = 0;
        for (const auto& c : convs) {
            good += dirichlet_check(x, c) == Verdict::True ? 1 : 0;
        }
        bool det_ok = true;
        for (std::size_t k = 1; k < convs.size(); ++k) {
            const ExactInteger det = convs[k].p * convs[k - 1].q - convs[k - 1].p * convs[k].q;
            det_ok = det_ok && det == ((k % 2 == 1) ? 1 : -1);
        }
        ok = ok && good == convs.size() && det_ok;
        d << t.name << ": " << good << "/" << convs.size() << (det_ok ? " det ok; " : " det FAIL; ");
    }
    return ok ? pass(d.str()) : fail(d.str());
}

// 7. Combined sequence at s = 3, depth 8, c4 = 1.
Outcome combined_engine(const PrecisionContext& ctx)
{
    const CombinedRun run = build_combined(3, 8, 8, 1, ctx);
    std::ostringstream d;
    bool ok = run.entries.size() == 64;
    std::size_t identity = 0, nonvanishing = 0;
    for (const auto& e : run.entries) {
        identity += e.identity_holds ? 1 : 0;
        nonvanishing += e.nonvanishing == Verdict::True ? 1 : 0;
    }
    ok = ok && identity == run.entries.size() && nonvanishing == run.entries.size();
    const auto diag = diagonal(run);
    bool decreasing = diag.size() == 8;
    for (std::size_t k = 1; k < diag.size(); ++k) {
        decreasing = decreasing && diag[k].err.upper() < diag[k - 1].err.lower();
    }
    ok = ok && decreasing;
    const SandwichReport rep = verify_eq15_16(run, 1, ctx);
    const bool match = rep.crossover_index == rep.predicted_index;
    ok = ok && match;
    auto idx = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("none"); };
    d << "entries=" << run.entries.size() << " identity=" << identity
      << " nonvanishing=" << nonvanishing << " diagonal_decreasing=" << (decreasing ? "yes" : "no")
      << " crossover=" << idx(rep.crossover_index) << " predicted=" << idx(rep.predicted_index);
    return ok ? pass(d.str()) : fail(d.str());
}

// 8. Finite Euler product against 6/pi^2.
Outcome euler_product(const PrecisionContext& ctx)
{
    const RealBall prod = euler_product_inv_zeta(2, 10000, ctx);
    const RealBall six_over_pi2 = RealBall::from_integer(ctx, 6) / pi(ctx).pow(2);
    const RealBall gap = (prod - six_over_pi2).abs();
    const bool ok = gap.upper() < pow10_neg(4);
    // The tail oracle sum_{p > P} p^-2 < 1/P bounds the same gap.
    const bool oracle_ok = gap.upper() < make_rational(1, 10000);
    std::string d = "gap=" + gap.mid_string(6) + " (tail oracle 1/P = 1e-4)";
    return ok && oracle_ok ? pass(d) : fail(d);
}

// 9. Random operation sequences at p and 2p bits against exact rationals.
Outcome inclusion_regression(const PrecisionContext& ctx)
{
    const PrecisionContext hi_ctx = ctx.doubled();
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    std::uniform_int_distribution<int> op_pick(0, 5);
    std::uniform_int_distribution<long> exp_pick(-3, 3);
    auto random_q = [&] { return make_rational(num(rng), den(rng)); };

    std::size_t violations = 0;
    constexpr int kSequences = 1000;
    constexpr int kSteps = 8;
    for (int seq = 0; seq < kSequences; ++seq) {
        ExactRational exact = random_q();
        RealBall lo = RealBall::from_rational(ctx, exact);
        RealBall hi = RealBall::from_rational(hi_ctx, exact);
        for (int step = 0; step < kSteps; ++step) {
            const ExactRational operand = random_q();
            const RealBall lo_b = RealBall::from_rational(ctx, operand);
            const RealBall hi_b = RealBall::from_rational(hi_ctx, operand);
            try {
                switch (op_pick(rng)) {
                case 0: exact += operand; lo = lo + lo_b; hi = hi + hi_b; break;
                case 1: exact -= operand; lo = lo - lo_b; hi = hi - hi_b; break;
                case 2: exact *= operand; lo = lo * lo_b; hi = hi * hi_b; break;
                case 3:
                    if (operand == 0) {
                        continue;
                    }
                    lo = lo / lo_b; hi = hi / hi_b; exact /= operand;
                    break;
                case 4:
                    if (exact == 0) {
                        continue;
                    }
                    lo = lo.recip(); hi = hi.recip(); exact = 1 / exact;
                    break;
                default: {
                    const long e = exp_pick(rng);
                    if (exact == 0 && e < 0) {
                        continue;
                    }
                    lo = lo.pow(e); hi = hi.pow(e);
                    ExactRational p = 1;
                    for (long k = 0; k < std::labs(e); ++k) {
                        p *= exact;
                    }
                    exact = e < 0 ? ExactRational(1 / p) : p;
                    break;
                }
                }
            } catch (const ZeroStraddleError&) {
                break;
            }
            exact.canonicalize();
            const bool bad = !lo.contains(exact) || !hi.contains(exact) ||
                             !lo.widened(hi).widened(hi).contains(hi);
            violations += bad ? 1 : 0;
            if (bad) {
                break;
            }
        }
    }
    std::string d = std::to_string(kSequences) + " sequences, " + std::to_string(violations) + " violations";
    return violations == 0 ? pass(d) : fail(d);
}

// 10. Exact sweep of |x - p/q| >= 1/(B q) for q <= 100.
Outcome rationality_sweep(const PrecisionContext&)
{
    std::size_t checked = 0, violations = 0;
    for (const ExactRational& x : {make_rational(22, 7), make_rational(355, 113)}) {
        for (long q = 1; q <= 100; ++q) {
            // Outside |p/q - x| < 1 the bound holds trivially; sweep a margin past it.
            ExactInteger lo, hi;
            const ExactRational left = (x - 1) * q;
            const ExactRational right = (x + 1) * q;
            mpz_fdiv_q(lo.get_mpz_t(), left.get_num_mpz_t(), left.get_den_mpz_t());
            mpz_cdiv_q(hi.get_mpz_t(), right.get_num_mpz_t(), right.get_den_mpz_t());
            for (ExactInteger p = lo - 1; p <= hi + 1; ++p) {
                if (make_rational(p, q) == x) {
                    continue;
                }
                ++checked;
                violations += rationality_lower_bound_check(x, p, q) ? 0 : 1;
            }
        }
    }
    std::string d = std::to_string(checked) + " pairs, " + std::to_string(violations) + " violations";
    return violations == 0 ? pass(d) : fail(d);
}

struct CriterionSpec {
    int id;
    const char* name;
    double time_limit;
    Outcome (*run)(const PrecisionContext&);
};

const CriterionSpec kCriteria[] = {
    {1, "catalan_constant_digits", 1.0, catalan_digits},
    {2, "jacobi_identity_sweep", 30.0, jacobi_sweep},
    {3, "closed_form_cross_checks", 10.0, closed_forms},
    {4, "finite_cutoff_factorization", 120.0, finite_factorization},
    {5, "summatory_scaling", 0.0, summatory_scaling},
    {6, "dirichlet_convergent_property", 0.0, convergent_property},
    {7, "combined_sequence_engine", 0.0, combined_engine},
    {8, "euler_product", 0.0, euler_product},
    {9, "ball_inclusion_regression", 0.0, inclusion_regression},
    {10, "rationality_criterion_sweep", 0.0, rationality_sweep},
};

} // namespace

std::vector<int> criterion_ids()
{
    std::vector<int> ids;
    for (const auto& c : kCriteria) {
        ids.push_back(c.id);
    }
    return ids;
}

CriterionResult run_criterion(int id, const PrecisionContext& ctx)
{
    for (const auto& c : kCriteria) {
        if (c.id != id) {
            continue;
        }
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        r.time_limit = c.time_limit;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = c.run(ctx);
            r.outcome = o.outcome;
            r.detail = o.detail;
        } catch (const PrecisionError& e) {
            r.outcome = CheckOutcome::Indeterminate;
            r.detail = e.what();
        } catch (const std::exception& e) {
            r.outcome = CheckOutcome::Fail;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && r.seconds >= c.time_limit && r.outcome == CheckOutcome::Pass) {
            r.outcome = CheckOutcome::Fail;
            r.detail += " (runtime " + report::decimal(r.seconds) + " s over limit)";
        }
        return r;
    }
    throw DomainError("unknown criterion id " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(const std::string& suite, const PrecisionContext& ctx)
{
    std::vector<int> ids;
    if (suite == "all") {
        ids = criterion_ids();
    } else {
        std::stringstream in(suite);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                std::size_t used = 0;
                ids.push_back(std::stoi(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::logic_error&) {
                throw DomainError("bad suite entry '" + item + "'");
            }
        }
    }
    std::vector<CriterionResult> out;
    for (int id : ids) {
        out.push_back(run_criterion(id, ctx));
    }
    return out;
}

std::string to_string(CheckOutcome o)
{
    switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

} // namespace zetalab
