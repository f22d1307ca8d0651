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

#include "zetalab/lseries.hpp"

#include "zetalab/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace zetalab {

namespace {

ExactInteger pow_z(const ExactInteger& base, unsigned long e)
{
    ExactInteger r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

ExactInteger pow2(unsigned long e)
{
    ExactInteger r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// x^e for rational x > 0 and any integer e.
ExactRational pow_q(const ExactRational& x, long e)
{
    const unsigned long m = static_cast<unsigned long>(std::labs(e));
    ExactRational r(pow_z(x.get_num(), m), pow_z(x.get_den(), m));
    if (e < 0) {
        r = 1 / r;
    }
    r.canonicalize();
    return r;
}

struct AcceleratedSum {
    ExactRational value;
    ExactInteger divisor; // |sum - value| <= |sum| / divisor
};

// Cohen-Villegas-Zagier acceleration of sum_{k >= 0} (-1)^k a_k for a moment
// sequence a_k = int_0^1 x^k w(x) dx with w >= 0. The number of terms is the
// smallest n with T_n(3) >= 2^bits, T_n the Chebyshev polynomial.
AcceleratedSum alternating_moment_sum(const std::function<ExactRational(long)>& term, long bits)
{
    const ExactInteger target = pow2(static_cast<unsigned long>(bits));
    ExactInteger t_prev = 1;
    ExactInteger t_cur = 3;
    long n = 1;
    while (t_cur < target) {
        ExactInteger next = 6 * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = next;
        ++n;
    }
    const ExactInteger& d = t_cur;
    ExactRational b = -1;
    ExactRational c = -ExactRational(d);
    ExactRational sum = 0;
    for (long k = 0; k < n; ++k) {
        c = b - c;
        sum += c * term(k);
        b = b * ExactRational((k + n) * (k - n)) * 2 / ExactRational((2 * k + 1) * (k + 1));
        b.canonicalize();
    }
    sum /= ExactRational(d);
    sum.canonicalize();
    return {sum, d};
}

long series_bits(const PrecisionContext& ctx) { return ctx.midpoint_bits() + 4; }

void require_s(long s, long min, const char* what)
{
    if (s < min) {
        throw DomainError(std::string(what) + ": s must be >= " + std::to_string(min));
    }
}

} // namespace

RealBall zeta(long s, const PrecisionContext& ctx)
{
    require_s(s, 2, "zeta");
    // eta(s) = sum (-1)^k (k+1)^-s, 0 < eta(s) < 1; zeta = eta / (1 - 2^(1-s)).
    const auto eta = alternating_moment_sum(
        [s](long k) { return make_rational(1, pow_z(k + 1, s)); }, series_bits(ctx));
    const ExactRational scale = 1 / (1 - make_rational(1, pow2(s - 1)));
    return RealBall::from_rational(ctx, eta.value * scale, scale / ExactRational(eta.divisor));
}

RealBall hurwitz_zeta(long s, const ExactRational& a, const PrecisionContext& ctx)
{
    require_s(s, 2, "hurwitz_zeta");
    if (a <= 0 || a > 1) {
        throw DomainError("hurwitz_zeta: shift must lie in (0, 1]");
    }
    const long bits = series_bits(ctx);
    const double log2_6 = std::log2(6.0);
    // log2 of the remainder bound 4 (s)_{2M-1} (N+a)^(1-s-2M) / 6^(2M).
    auto log2_bound = [&](long n_cut, long m) {
        double lg = 2.0;
        for (long j = 0; j < 2 * m - 1; ++j) {
            lg += std::log2(static_cast<double>(s + j));
        }
        const double base = n_cut + a.get_d();
        return lg - 2.0 * m * log2_6 + (1.0 - s - 2.0 * m) * std::log2(base);
    };
    long n_cut = std::max(16L, bits / 4);
    long terms = 0;
    for (;;) {
        for (long m = 1; m <= 2 * n_cut; ++m) {
            if (log2_bound(n_cut, m) < -bits - 2) {
                terms = m;
                break;
            }
        }
        if (terms != 0) {
            break;
        }
        n_cut *= 2;
    }

    ExactRational sum = 0;
    for (long k = 0; k < n_cut; ++k) {
        sum += pow_q(ExactRational(k) + a, -s);
    }
    const ExactRational tail_base = ExactRational(n_cut) + a;
    sum += pow_q(tail_base, 1 - s) / ExactRational(s - 1);
    sum += pow_q(tail_base, -s) / 2;
    ExactInteger rising = s; // (s)_{2j-1}
    for (long j = 1; j <= terms; ++j) {
        if (j > 1) {
            rising *= (s + 2 * j - 3) * ExactInteger(s + 2 * j - 2);
        }
        sum += bernoulli(2 * j) / ExactRational(factorial(2 * j)) * ExactRational(rising) *
               pow_q(tail_base, -s - 2 * j + 1);
    }
    const ExactRational remainder =
        ExactRational(4 * rising) / ExactRational(pow_z(6, 2 * terms)) *
        pow_q(tail_base, 1 - s - 2 * terms);
    sum.canonicalize();
    return RealBall::from_rational(ctx, sum, remainder);
}

RealBall beta(long s, const DirichletCharacter& chi, const PrecisionContext& ctx)
{
    if (chi.is_alternating()) {
        require_s(s, 1, "beta");
        // 0 < L(s, chi_4) <= 1.
        const auto acc = alternating_moment_sum(
            [s](long k) { return make_rational(1, pow_z(2 * k + 1, s)); }, series_bits(ctx));
        return RealBall::from_rational(ctx, acc.value, make_rational(1, acc.divisor));
    }
    if (s < 2) {
        throw DomainError("beta: s = 1 needs an alternating character");
    }
    const long q = chi.modulus();
    RealBall total(ctx);
    for (long a = 1; a <= q; ++a) {
        const int c = chi(a);
        if (c == 0) {
            continue;
        }
        const RealBall h = hurwitz_zeta(s, make_rational(a, q), ctx);
        total = c > 0 ? total + h : total - h;
    }
    return total * RealBall::from_rational(ctx, make_rational(1, pow_z(q, s)));
}

RealBall beta(long s, const PrecisionContext& ctx)
{
    return beta(s, quadratic_character(4), ctx);
}

ClosedFormValue zeta_even_closed(long n, const PrecisionContext& ctx)
{
    if (n < 1) {
        throw DomainError("zeta_even_closed: n must be >= 1");
    }
    ExactRational r = ExactRational(pow2(2 * n)) * bernoulli(2 * n) /
                      ExactRational(2 * factorial(2 * n));
    if (n % 2 == 0) {
        r = -r;
    }
    r.canonicalize();
    return {r, 2 * n, RealBall::from_rational(ctx, r) * pi(ctx).pow(2 * n)};
}

ClosedFormValue beta_odd_closed(long n, const PrecisionContext& ctx)
{
    if (n < 0) {
        throw DomainError("beta_odd_closed: n must be >= 0");
    }
    ExactRational r = make_rational(euler_number(2 * n), pow2(2 * n + 2) * factorial(2 * n));
    if (n % 2 == 1) {
        r = -r;
    }
    return {r, 2 * n + 1, RealBall::from_rational(ctx, r) * pi(ctx).pow(2 * n + 1)};
}

RealBall dedekind_product(long s, const PrecisionContext& ctx)
{
    require_s(s, 2, "dedekind_product");
    return zeta(s, ctx) * beta(s, ctx);
}

ExactRational summatory_exact(long s, std::uint64_t x)
{
    require_s(s, 2, "summatory_exact");
    if (x < 1) {
        throw DomainError("summatory_exact: x must be >= 1");
    }
    const auto r = r_divisor_table(x, quadratic_character(4));
    ExactRational sum = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        if (r[n] != 0) {
            sum += make_rational(r[n], pow_z(ExactInteger(static_cast<unsigned long>(n)), s));
        }
    }
    sum.canonicalize();
    return sum;
}

ExactRational summatory_tail_bound(long s, std::uint64_t x)
{
    require_s(s, 2, "summatory_tail_bound");
    if (x < 1) {
        throw DomainError("summatory_tail_bound: x must be >= 1");
    }
    // Partial summation against R(t) <= (pi/4)(sqrt t + c)^2 with the upper
    // bounds pi <= 22/7, c = 1/sqrt 2 <= 7072/10000, sqrt x <= isqrt(x) + 1:
    // tail <= (pi/4) s [x^(1-s)/(s-1) + 2c x^(1/2-s)/(s-1/2) + c^2 x^(-s)/s].
    const ExactRational pi_up = make_rational(22, 7);
    const ExactRational c = make_rational(7072, 10000);
    const ExactInteger xi(static_cast<unsigned long>(x));
    ExactInteger root;
    mpz_sqrt(root.get_mpz_t(), xi.get_mpz_t());
    const ExactRational sqrt_up(root + 1);
    const ExactRational xs(pow_z(xi, s));
    const ExactRational sr(s);
    ExactRational inner = ExactRational(xi) / xs / (sr - 1) +
                          2 * c * sqrt_up / xs / (sr - make_rational(1, 2)) +
                          c * c / xs / sr;
    ExactRational bound = pi_up / 4 * sr * inner;
    bound.canonicalize();
    return bound;
}

std::vector<SummatoryRecord> summatory_many(long s, std::span<const std::uint64_t> xs,
                                            const PrecisionContext& ctx)
{
    require_s(s, 2, "summatory");
    if (xs.empty()) {
        return {};
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 1 || (i > 0 && xs[i] <= xs[i - 1])) {
            throw DomainError("summatory: cutoffs must be >= 1 and strictly increasing");
        }
    }
    const std::uint64_t max_x = xs.back();
    const auto r = r_divisor_table(max_x, quadratic_character(4));

    // Fixed-point accumulation: total = sum r(n) floor(2^K / n^s). Each floor
    // loses less than one unit, so 2^K S lies in [total, total + sum r(n)].
    const unsigned long frac_bits = static_cast<unsigned long>(ctx.midpoint_bits()) + 64 +
                                    static_cast<unsigned long>(std::log2(double(max_x)) + 1);
    const ExactInteger scale = pow2(frac_bits);
    const RealBall limit = dedekind_product(s, ctx);

    std::vector<SummatoryRecord> out;
    out.reserve(xs.size());
    ExactInteger total = 0;
    ExactInteger count = 0;
    ExactInteger term;
    std::size_t next = 0;
    for (std::uint64_t n = 1; n <= max_x; ++n) {
        if (r[n] != 0) {
            const ExactInteger power = pow_z(ExactInteger(static_cast<unsigned long>(n)), s);
            mpz_tdiv_q(term.get_mpz_t(), scale.get_mpz_t(), power.get_mpz_t());
            total += term * r[n];
            count += r[n];
        }
        if (n == xs[next]) {
            const ExactRational mid = make_rational(2 * total + count, 2 * scale);
            const ExactRational rad = make_rational(count, 2 * scale);
            RealBall partial = RealBall::from_rational(ctx, mid, rad);
            RealBall delta = partial - limit;
            const ExactInteger xi(static_cast<unsigned long>(n));
            RealBall scaled = delta * RealBall::from_integer(ctx, pow_z(xi, s - 1));
            out.push_back({s, n, partial, delta, scaled});
            ++next;
        }
    }
    return out;
}

SummatoryRecord summatory(long s, std::uint64_t x, const PrecisionContext& ctx)
{
    if (x < 1) {
        throw DomainError("summatory: x must be >= 1");
    }
    const std::uint64_t xs[] = {x};
    return summatory_many(s, xs, ctx).front();
}

namespace {

SummatoryExperiment run_summatory_experiment(std::string name, long s,
                                             std::span<const std::uint64_t> xs,
                                             const PrecisionContext& ctx)
{
    if (xs.size() < 2) {
        throw DomainError("summatory experiment: need at least two cutoffs");
    }
    for (auto x : xs) {
        if (x < 100) {
            throw DomainError("summatory experiment: cutoffs must be >= 100");
        }
    }
    SummatoryExperiment ex{std::move(name), s, summatory_many(s, xs, ctx),
                           RealBall(ctx), 0.0, RealBall(ctx), false, {}};
    ex.fitted_c0 = ex.records.back().scaled_delta;
    const double last = ex.fitted_c0.mid_double();
    for (const auto& rec : ex.records) {
        ex.spread = std::max(ex.spread, std::fabs(rec.scaled_delta.mid_double() - last));
    }
    ex.c0_positive = compare_to_rational(ex.fitted_c0, 0) == Comparison::CertainlyGreater;
    ex.predicted_c0 = -(pi(ctx) * RealBall::from_rational(ctx, make_rational(1, 4 * (s - 1))));
    const double c0 = ex.predicted_c0.mid_double();
    for (const auto& rec : ex.records) {
        const double x = static_cast<double>(rec.x);
        const double model = c0 * std::pow(x, 1.0 - s);
        const double envelope = std::pow(x, (1.0 - s) / 2.0);
        ex.residual_ratio.push_back(std::fabs(rec.delta.mid_double() - model) / envelope);
    }
    return ex;
}

} // namespace

SummatoryExperiment lemma6_experiment(long s, std::span<const std::uint64_t> xs,
                                      const PrecisionContext& ctx)
{
    return run_summatory_experiment("lemma6", s, xs, ctx);
}

SummatoryExperiment beta_summatory_experiment(long s, std::span<const std::uint64_t> xs,
                                              const PrecisionContext& ctx)
{
    return run_summatory_experiment("beta_summatory", s, xs, ctx);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> primes;
    if (bound < 2) {
        return primes;
    }
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p]) {
            continue;
        }
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= bound; m += p) {
            composite[m] = true;
        }
    }
    return primes;
}

RealBall euler_product_inv_zeta(long s, std::uint64_t prime_bound, const PrecisionContext& ctx)
{
    require_s(s, 2, "euler_product_inv_zeta");
    if (prime_bound < 2) {
        throw DomainError("euler_product_inv_zeta: prime bound must be >= 2");
    }
    RealBall product = RealBall::from_integer(ctx, 1);
    for (auto p : primes_up_to(prime_bound)) {
        const ExactInteger ps = pow_z(ExactInteger(static_cast<unsigned long>(p)), s);
        product *= RealBall::from_rational(ctx, make_rational(ps - 1, ps));
    }
    return product;
}

} // namespace zetalab
