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

#include "zetalab/diophantine.hpp"

#include "zetalab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zetalab {

namespace {

ExactInteger floor_q(const ExactRational& x)
{
    ExactInteger r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

// Natural log of a positive rational, through a 128-bit float.
double log_q(const ExactRational& x)
{
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    const double r = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

double log_z(const ExactInteger& x) { return log_q(ExactRational(x)); }

struct Distance {
    ExactRational lo;
    ExactRational hi;
};

// Range of |x - t| over the ball.
Distance distance_range(const RealBall& x, const ExactRational& t)
{
    const ExactRational a = abs(ExactRational(x.lower() - t));
    const ExactRational b = abs(ExactRational(x.upper() - t));
    const bool straddles = x.lower() <= t && t <= x.upper();
    return {straddles ? ExactRational(0) : std::min(a, b), std::max(a, b)};
}

} // namespace

CFExpansion cf_expand(const ExactRational& x, std::size_t max_terms)
{
    if (max_terms < 1) {
        throw DomainError("cf_expand: max_terms must be >= 1");
    }
    CFExpansion cf;
    ExactRational rest = x;
    while (cf.partial_quotients.size() < max_terms) {
        const ExactInteger a = floor_q(rest);
        cf.partial_quotients.push_back(a);
        rest -= a;
        if (rest == 0) {
            cf.termination = Termination::ExactTermination;
            return cf;
        }
        rest = 1 / rest;
    }
    cf.termination = Termination::MaxTerms;
    return cf;
}

CFExpansion cf_expand(const RealBall& x, std::size_t max_terms)
{
    if (max_terms < 1) {
        throw DomainError("cf_expand: max_terms must be >= 1");
    }
    ExactRational lo = x.lower();
    ExactRational hi = x.upper();
    if (lo == hi) {
        return cf_expand(lo, max_terms);
    }
    CFExpansion cf;
    while (cf.partial_quotients.size() < max_terms) {
        const ExactInteger a = floor_q(lo);
        if (floor_q(hi) != a) {
            cf.termination = Termination::PrecisionExhausted;
            return cf;
        }
        cf.partial_quotients.push_back(a);
        lo -= a;
        hi -= a;
        if (lo == 0) {
            // One end terminates here while the rest of the ball continues.
            cf.termination = Termination::PrecisionExhausted;
            return cf;
        }
        // x -> 1 / (x - a) reverses the order of the endpoints.
        ExactRational next_lo = 1 / hi;
        hi = 1 / lo;
        lo = next_lo;
    }
    cf.termination = Termination::MaxTerms;
    return cf;
}

std::vector<Convergent> convergents(const CFExpansion& cf)
{
    if (cf.partial_quotients.empty()) {
        throw DomainError("convergents: empty expansion");
    }
    std::vector<Convergent> out;
    out.reserve(cf.partial_quotients.size());
    ExactInteger p_prev2 = 0, p_prev1 = 1;
    ExactInteger q_prev2 = 1, q_prev1 = 0;
    long index = 0;
    for (const auto& a : cf.partial_quotients) {
        ExactInteger p = a * p_prev1 + p_prev2;
        ExactInteger q = a * q_prev1 + q_prev2;
        out.push_back({index++, p, q});
        p_prev2 = p_prev1;
        p_prev1 = p;
        q_prev2 = q_prev1;
        q_prev1 = q;
    }
    return out;
}

Verdict dirichlet_check(const RealBall& x, const Convergent& c)
{
    if (c.q < 1) {
        throw DomainError("dirichlet_check: q must be >= 1");
    }
    const Distance d = distance_range(x, c.value());
    const ExactRational bound = make_rational(1, c.q * c.q);
    if (d.hi < bound) {
        return Verdict::True;
    }
    if (d.lo >= bound) {
        return Verdict::False;
    }
    return Verdict::Indeterminate;
}

bool rationality_lower_bound_check(const ExactRational& x, const ExactInteger& p,
                                   const ExactInteger& q)
{
    if (q < 1) {
        throw DomainError("rationality_lower_bound_check: q must be >= 1");
    }
    const ExactRational approx = make_rational(p, q);
    if (approx == x) {
        throw DomainError("rationality_lower_bound_check: p/q equals the target");
    }
    const ExactRational gap = abs(ExactRational(x - approx));
    return gap >= make_rational(1, x.get_den() * q);
}

IrrationalityScan irrationality_criterion_scan(const RealBall& x,
                                               std::span<const Convergent> convs, double delta)
{
    if (convs.empty()) {
        throw DomainError("irrationality_criterion_scan: no convergents");
    }
    if (!(delta > 0.0)) {
        throw DomainError("irrationality_criterion_scan: delta must be positive");
    }
    // Slack for the double-precision logarithms.
    constexpr double kSlack = 1e-12;
    const double threshold = 1.0 + delta;
    IrrationalityScan scan;
    scan.delta = delta;
    for (const auto& c : convs) {
        ExponentWitness w;
        w.index = c.index;
        w.p = c.p;
        w.q = c.q;
        const Distance d = distance_range(x, c.value());
        if (c.q <= 1) {
            w.skipped = "q = 1 has no exponent";
        } else if (d.hi == 0) {
            w.skipped = "convergent equals the target";
        }
        if (!w.skipped.empty()) {
            ++scan.skipped;
            scan.entries.push_back(std::move(w));
            continue;
        }
        const double lq = log_z(c.q);
        w.exponent_lo = -log_q(d.hi) / lq;
        w.exponent_hi = d.lo == 0 ? std::numeric_limits<double>::infinity() : -log_q(d.lo) / lq;
        if (w.exponent_lo >= threshold + kSlack) {
            w.witnessed = Verdict::True;
            ++scan.witnessed;
        } else if (w.exponent_hi < threshold - kSlack) {
            w.witnessed = Verdict::False;
            ++scan.not_witnessed;
        } else {
            w.witnessed = Verdict::Indeterminate;
            ++scan.indeterminate;
        }
        scan.entries.push_back(std::move(w));
    }
    return scan;
}

std::vector<MuEstimate> mu_estimate(std::span<const Convergent> convs)
{
    if (convs.size() < 2) {
        throw DomainError("mu_estimate: need at least two convergents");
    }
    std::vector<MuEstimate> out;
    for (std::size_t i = 0; i + 1 < convs.size(); ++i) {
        if (convs[i].q <= 1) {
            continue;
        }
        out.push_back({convs[i].index, 1.0 + log_z(convs[i + 1].q) / log_z(convs[i].q)});
    }
    return out;
}

std::string to_string(Termination t)
{
    switch (t) {
    case Termination::MaxTerms: return "max_terms";
    case Termination::PrecisionExhausted: return "precision_exhausted";
    case Termination::ExactTermination: return "exact_termination";
    }
    return "unknown";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

} // namespace zetalab
