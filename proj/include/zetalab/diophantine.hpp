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

#ifndef ZETALAB_DIOPHANTINE_HPP
#define ZETALAB_DIOPHANTINE_HPP

#include "zetalab/ball.hpp"
#include "zetalab/exact.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zetalab {

enum class Termination { MaxTerms, PrecisionExhausted, ExactTermination };

// Three-valued outcome of a check carried out on a ball.
enum class Verdict { True, False, Indeterminate };

/// Partial quotients [a0; a1, a2, ...]. For ball input every quotient is
/// shared by all points of the ball.
struct CFExpansion {
    std::vector<ExactInteger> partial_quotients;
    Termination termination = Termination::MaxTerms;
};

struct Convergent {
    long index = 0;
    ExactInteger p;
    ExactInteger q;

    ExactRational value() const { return make_rational(p, q); }
};

CFExpansion cf_expand(const ExactRational& x, std::size_t max_terms);

// Expands both ends of the ball in lockstep and stops at the first quotient
// on which they disagree (PrecisionExhausted).
CFExpansion cf_expand(const RealBall& x, std::size_t max_terms);

/// p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}, seeded with
/// p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1.
std::vector<Convergent> convergents(const CFExpansion& cf);

// |x - p/q| < 1/q^2 for every point of the ball.
Verdict dirichlet_check(const RealBall& x, const Convergent& c);

/// |A/B - p/q| >= 1/(B q), checked exactly. Throws DomainError when
/// p/q == A/B or q < 1.
bool rationality_lower_bound_check(const ExactRational& x, const ExactInteger& p,
                                   const ExactInteger& q);

// Exponent e with |x - p/q| = q^-e, bracketed over the ball.
struct ExponentWitness {
    long index = 0;
    ExactInteger p;
    ExactInteger q;
    double exponent_lo = 0.0;
    double exponent_hi = 0.0;
    Verdict witnessed = Verdict::Indeterminate; // e >= 1 + delta
    std::string skipped;                         // non-empty: entry excluded, with reason
};

struct IrrationalityScan {
    double delta = 0.0;
    std::vector<ExponentWitness> entries;
    std::size_t witnessed = 0;
    std::size_t not_witnessed = 0;
    std::size_t indeterminate = 0;
    std::size_t skipped = 0;
};

IrrationalityScan irrationality_criterion_scan(const RealBall& x,
                                               std::span<const Convergent> convs, double delta);

struct MuEstimate {
    long index;
    double mu; // 1 + ln q_{n+1} / ln q_n
};

// Entries with q_n = 1 are skipped.
std::vector<MuEstimate> mu_estimate(std::span<const Convergent> convs);

std::string to_string(Termination t);
std::string to_string(Verdict v);

} // namespace zetalab

#endif // ZETALAB_DIOPHANTINE_HPP
