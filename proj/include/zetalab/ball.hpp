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

#ifndef ZETALAB_BALL_HPP
#define ZETALAB_BALL_HPP

#include "zetalab/exact.hpp"

#include <mpfr.h>

#include <string>

namespace zetalab {

/// Binary precision used for ball midpoints. Passed explicitly to every
/// constructor of analytic values; there is no ambient default.
class PrecisionContext {
public:
    static constexpr long kDefaultWorkingBits = 256;
    static constexpr long kDefaultGuardBits = 16;

    PrecisionContext() = default;
    // Throws DomainError unless working_bits >= 64 and guard_bits >= 8.
    explicit PrecisionContext(long working_bits, long guard_bits = kDefaultGuardBits);

    long working_bits() const noexcept { return working_bits_; }
    long guard_bits() const noexcept { return guard_bits_; }
    // Precision actually carried by midpoints.
    long midpoint_bits() const noexcept { return working_bits_ + guard_bits_; }

    PrecisionContext doubled() const { return PrecisionContext(2 * working_bits_, guard_bits_); }

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

private:
    long working_bits_ = kDefaultWorkingBits;
    long guard_bits_ = kDefaultGuardBits;
};

namespace detail {

// Owning, copyable mpfr_t.
class Mpfr {
public:
    explicit Mpfr(long bits);
    Mpfr(const Mpfr& other);
    Mpfr(Mpfr&& other) noexcept;
    Mpfr& operator=(const Mpfr& other);
    Mpfr& operator=(Mpfr&& other) noexcept;
    ~Mpfr();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    long bits() const noexcept { return mpfr_get_prec(value_); }

private:
    mpfr_t value_;
    bool live_ = true;
};

} // namespace detail

enum class Comparison { CertainlyLess, CertainlyGreater, Contains };

/// Midpoint-radius enclosure of a real number. The true value lies in
/// [mid - rad, mid + rad]. The midpoint carries the context's precision;
/// the radius is a 64-bit float that is only ever rounded upward.
class RealBall {
public:
    static constexpr long kRadiusBits = 64;

    explicit RealBall(const PrecisionContext& ctx);

    static RealBall from_integer(const PrecisionContext& ctx, const ExactInteger& v);
    static RealBall from_rational(const PrecisionContext& ctx, const ExactRational& v);
    // Midpoint v (rounded), radius at least rad (rounded up).
    static RealBall from_rational(const PrecisionContext& ctx, const ExactRational& v,
                                  const ExactRational& rad);

    long bits() const noexcept { return mid_.bits(); }
    const detail::Mpfr& midpoint() const noexcept { return mid_; }
    const detail::Mpfr& radius() const noexcept { return rad_; }

    ExactRational mid_exact() const;
    ExactRational rad_exact() const;
    ExactRational lower() const;
    ExactRational upper() const;

    double mid_double() const;
    double rad_double() const; // rounded up

    bool is_exact() const { return mpfr_zero_p(rad_.get()); }
    bool excludes_zero() const;
    bool contains(const ExactRational& q) const;
    // Interval of `inner` is a subset of this ball's interval.
    bool contains(const RealBall& inner) const;
    bool overlaps(const RealBall& other) const;

    // Radius grown by a non-negative amount.
    RealBall widened(const ExactRational& extra) const;
    RealBall widened(const RealBall& by_radius_of) const;

    RealBall operator-() const;
    RealBall abs() const;
    RealBall recip() const; // throws ZeroStraddleError
    RealBall pow(long n) const;

    friend RealBall operator+(const RealBall& a, const RealBall& b);
    friend RealBall operator-(const RealBall& a, const RealBall& b);
    friend RealBall operator*(const RealBall& a, const RealBall& b);
    friend RealBall operator/(const RealBall& a, const RealBall& b);

    RealBall& operator+=(const RealBall& b) { return *this = *this + b; }
    RealBall& operator-=(const RealBall& b) { return *this = *this - b; }
    RealBall& operator*=(const RealBall& b) { return *this = *this * b; }

    // Decimal midpoint with `digits` significant digits (0 = all meaningful).
    std::string mid_string(int digits = 0) const;
    std::string rad_string() const;

    // Midpoint rounded to `decimals` digits after the point, only if every
    // point of the ball rounds to the same string; empty otherwise.
    std::string certified_fixed(int decimals) const;

    friend RealBall pi(const PrecisionContext& ctx);

private:
    RealBall(long bits, int);

    void add_rounding_error(int ternary);
    void add_radius(mpfr_srcptr extra);

    detail::Mpfr mid_;
    detail::Mpfr rad_;
};

RealBall pi(const PrecisionContext& ctx);

Comparison compare_to_rational(const RealBall& x, const ExactRational& r);

// Free-function spellings of the ball operations.
inline RealBall ball_add(const RealBall& a, const RealBall& b) { return a + b; }
inline RealBall ball_sub(const RealBall& a, const RealBall& b) { return a - b; }
inline RealBall ball_mul(const RealBall& a, const RealBall& b) { return a * b; }
inline RealBall ball_div(const RealBall& a, const RealBall& b) { return a / b; }
inline RealBall ball_recip(const RealBall& a) { return a.recip(); }
inline RealBall ball_pow_int(const RealBall& a, long n) { return a.pow(n); }

std::string to_string(Comparison c);

} // namespace zetalab

#endif // ZETALAB_BALL_HPP
