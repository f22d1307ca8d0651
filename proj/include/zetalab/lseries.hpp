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

#ifndef ZETALAB_LSERIES_HPP
#define ZETALAB_LSERIES_HPP

#include "zetalab/ball.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/exact.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zetalab {

/// zeta(s) for integer s >= 2, from the accelerated alternating eta series.
RealBall zeta(long s, const PrecisionContext& ctx);

/// L(s, chi). The mod-4 character uses accelerated alternating summation and
/// accepts s >= 1; other characters go through Hurwitz zeta and need s >= 2.
RealBall beta(long s, const DirichletCharacter& chi, const PrecisionContext& ctx);
RealBall beta(long s, const PrecisionContext& ctx);

/// Hurwitz zeta(s, a) for s >= 2 and rational 0 < a <= 1 by Euler-Maclaurin
/// summation with a rigorous remainder bound.
RealBall hurwitz_zeta(long s, const ExactRational& a, const PrecisionContext& ctx);

// rational_part * pi^pi_power.
struct ClosedFormValue {
    ExactRational rational_part;
    long pi_power;
    RealBall as_ball;
};

// zeta(2n) = (-1)^(n+1) 2^(2n) B_2n / (2 (2n)!) * pi^(2n), n >= 1.
ClosedFormValue zeta_even_closed(long n, const PrecisionContext& ctx);
// L(2n+1, chi_4) = (-1)^n E_2n / (2^(2n+2) (2n)!) * pi^(2n+1), n >= 0.
ClosedFormValue beta_odd_closed(long n, const PrecisionContext& ctx);

/// zeta(s) L(s, chi_4), the Dedekind zeta function of Q(i).
RealBall dedekind_product(long s, const PrecisionContext& ctx);

// Exact sum_{n <= x} r(n) / n^s for the mod-4 character. Denominators grow
// like lcm(1..x)^s, so this is meant for small x.
ExactRational summatory_exact(long s, std::uint64_t x);

// Rigorous upper bound for sum_{n > x} r(n) / n^s (chi_4), from the lattice
// point bound sum_{n <= t} r(n) <= (pi/4)(sqrt(t) + 1/sqrt(2))^2.
ExactRational summatory_tail_bound(long s, std::uint64_t x);

struct SummatoryRecord {
    long s;
    std::uint64_t x;
    RealBall partial_sum;  // encloses sum_{n <= x} r(n) / n^s
    RealBall delta;        // partial_sum - zeta(s) L(s, chi_4)
    RealBall scaled_delta; // delta * x^(s-1)
};

SummatoryRecord summatory(long s, std::uint64_t x, const PrecisionContext& ctx);

// One pass over n <= max(xs); xs must be strictly increasing and >= 1.
std::vector<SummatoryRecord> summatory_many(long s, std::span<const std::uint64_t> xs,
                                            const PrecisionContext& ctx);

struct SummatoryExperiment {
    std::string name;
    long s;
    std::vector<SummatoryRecord> records;
    RealBall fitted_c0;    // scaled_delta at the last cutoff
    double spread;         // max |scaled_delta_i - fitted_c0| over the cutoffs
    RealBall predicted_c0; // -L(1, chi_4) / (s - 1) = -pi / (4 (s - 1))
    bool c0_positive;      // sign of the fit; negative for chi_4
    // |delta - predicted_c0 x^(1-s)| / x^((1-s)/2) per record.
    std::vector<double> residual_ratio;
};

/// Summatory records at the cutoffs plus the fitted correction constant.
/// Requires at least two strictly increasing cutoffs, each >= 100.
SummatoryExperiment lemma6_experiment(long s, std::span<const std::uint64_t> xs,
                                      const PrecisionContext& ctx);
// Same table, reported under the L-function (mirror) experiment name.
SummatoryExperiment beta_summatory_experiment(long s, std::span<const std::uint64_t> xs,
                                              const PrecisionContext& ctx);

/// prod_{p <= prime_bound} (1 - p^-s), which tends to 1/zeta(s).
RealBall euler_product_inv_zeta(long s, std::uint64_t prime_bound, const PrecisionContext& ctx);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

} // namespace zetalab

#endif // ZETALAB_LSERIES_HPP
