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

#ifndef ZETALAB_APPROX_SEQ_HPP
#define ZETALAB_APPROX_SEQ_HPP

#include "zetalab/ball.hpp"
#include "zetalab/diophantine.hpp"
#include "zetalab/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zetalab {

// Z = zeta(s) L(s, chi_4) and 1/L(s, chi_4).
RealBall target_Z(long s, const PrecisionContext& ctx);
RealBall inv_L(long s, const PrecisionContext& ctx);

/// The factorization target = Z * inv used by the combined sequence. For the
/// zeta problem target = zeta(s), inv = 1/L(s); the mirror swaps the roles
/// (target = L(s), inv = 1/zeta(s)).
struct ApproxProblem {
    std::string name;
    long s = 0;
    RealBall target;
    RealBall z;
    RealBall inv;
};

ApproxProblem zeta_problem(long s, const PrecisionContext& ctx);
ApproxProblem mirror_problem(long s, const PrecisionContext& ctx);

struct DistanceRow {
    Convergent inv_conv;   // p_n / q_n of `inv`
    RealBall distance;     // |target - (p_n/q_n) Z|
    RealBall scaled;       // distance * q_n^2
    Verdict positive;      // distance certainly > 0
};

struct FiniteCutoffRow {
    std::uint64_t x;
    long n;
    RealBall distance; // |target - (p_n/q_n) S(x)|
    RealBall scaled;   // distance * q_n^2
};

struct DistanceReport {
    std::string problem;
    long s = 0;
    std::vector<DistanceRow> rows;
    std::vector<FiniteCutoffRow> finite_rows;
    ExactRational c2;            // certified upper bound of max_n distance_n q_n^2
    std::size_t indeterminate = 0;
    long suggested_bits = 0;     // non-zero when some positivity was not certified
};

/// |target - (p_n/q_n) Z| for the first n_count convergents of `inv`, with the
/// fitted constant c2 and, for each cutoff in xs, the finite-x variant that
/// uses the summatory partial sum in place of Z.
DistanceReport verify_eq10(const ApproxProblem& problem, std::size_t n_count,
                       std::span<const std::uint64_t> xs, const PrecisionContext& ctx);
DistanceReport verify_eq10(long s, std::size_t n_count, std::span<const std::uint64_t> xs,
                       const PrecisionContext& ctx);

struct SandwichRow {
    long n = 0;
    ExactInteger q;
    ExactRational lower;      // c/(b q_n) or c/(b^2 q_n)
    ExactRational upper;      // c2 / q_n^2
    Verdict bounds_consistent; // lower < upper
};

struct Case1Report {
    long s = 0;
    ExactRational hypothesis; // assumed rational value A/B of zeta(s)
    long m = 0;
    Convergent z_conv;        // a_m / b_m
    ExactRational c2;
    ExactRational c3;         // 1/B
    ExactRational threshold;  // c2 b_m / c3
    std::vector<SandwichRow> rows;
    std::vector<bool> lower_bound_exact; // lower bound checked on (a_m p_n)/(b_m q_n)
    std::optional<long> crossover_index;  // first n with lower >= upper
    std::optional<long> predicted_index;  // first n with q_n >= threshold
};

Case1Report case1_experiment(long s, const ExactRational& hypothesis, long m, std::size_t n_count,
                             const PrecisionContext& ctx);

struct CombinedApproxEntry {
    long m = 0;
    long n = 0;
    Convergent z_conv;   // a_m / b_m
    Convergent inv_conv; // p_n / q_n
    ExactInteger c4;
    ExactInteger r;      // a_m b_m p_n + c4 p_n
    ExactInteger s;      // b_m^2 q_n
    RealBall err;        // |target - r/s|
    bool identity_holds = false; // r/s == (a_m/b_m + c4/b_m^2)(p_n/q_n)
    Verdict nonvanishing = Verdict::Indeterminate;
};

struct CombinedRun {
    ApproxProblem problem;
    std::vector<Convergent> z_convs;
    std::vector<Convergent> inv_convs;
    ExactInteger c4;
    std::vector<CombinedApproxEntry> entries; // row-major, m outer
    std::vector<std::string> warnings;
    // Observed max of err * min(q_n^2, b_m^2).
    RealBall fitted_error_constant;
};

CombinedRun build_combined(const ApproxProblem& problem, std::size_t depth_m, std::size_t depth_n,
                           const ExactInteger& c4, const PrecisionContext& ctx);
CombinedRun build_combined(long s, std::size_t depth_m, std::size_t depth_n,
                           const ExactInteger& c4, const PrecisionContext& ctx);

// Entries with m == n, in order.
std::vector<CombinedApproxEntry> diagonal(const CombinedRun& run);

struct SandwichReport {
    long m0 = 0;
    ExactInteger b;          // b_{m0}
    ExactRational c2;        // from verify_eq10 over the run's inv convergents
    ExactRational c5;        // certified lower bound of min_n err b^2 q_n on row m0
    ExactRational threshold; // c2 b^2 / c5
    std::vector<SandwichRow> rows;
    std::vector<Verdict> data_below_upper; // err_n < c2 / q_n^2 per row
    std::optional<long> crossover_index;   // first n with lower >= upper (ball comparison)
    std::optional<long> predicted_index;   // first n with q_n c5 >= c2 b^2 (integer comparison)
    std::optional<long> data_violation_index; // first n with err_n >= c2/q_n^2 certified
    std::size_t indeterminate = 0;
};

SandwichReport verify_eq15_16(const CombinedRun& run, long m0, const PrecisionContext& ctx);

struct MirrorResult {
    CombinedRun run;
    SandwichReport report;
};

// Requires even s >= 2.
MirrorResult beta_mirror(long s, std::size_t depth, const ExactInteger& c4, long m0,
                         const PrecisionContext& ctx);

} // namespace zetalab

#endif // ZETALAB_APPROX_SEQ_HPP
