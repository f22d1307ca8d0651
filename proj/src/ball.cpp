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

#include "zetalab/ball.hpp"

#include "zetalab/error.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace zetalab {

PrecisionContext::PrecisionContext(long working_bits, long guard_bits)
    : working_bits_(working_bits), guard_bits_(guard_bits)
{
    if (working_bits < 64) {
        throw DomainError("precision: working_bits must be >= 64");
    }
    if (guard_bits < 8) {
        throw DomainError("precision: guard_bits must be >= 8");
    }
}

namespace detail {

Mpfr::Mpfr(long bits) { mpfr_init2(value_, bits); mpfr_set_zero(value_, 1); }

Mpfr::Mpfr(const Mpfr& other)
{
    mpfr_init2(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept
{
    mpfr_init2(value_, other.bits());
    mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.bits());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

} // namespace detail

namespace {

constexpr long kRadBits = RealBall::kRadiusBits;

// rad += 2^(exp(mid) - prec(mid)), one ulp of the midpoint.
void add_ulp(mpfr_ptr rad, mpfr_srcptr mid)
{
    if (mpfr_zero_p(mid)) {
        return;
    }
    mpfr_t ulp;
    mpfr_init2(ulp, kRadBits);
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
    mpfr_add(rad, rad, ulp, MPFR_RNDU);
    mpfr_clear(ulp);
}

ExactRational to_rational(mpfr_srcptr x)
{
    ExactRational q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

} // namespace

RealBall::RealBall(long bits, int) : mid_(bits), rad_(kRadBits) {}

RealBall::RealBall(const PrecisionContext& ctx) : RealBall(ctx.midpoint_bits(), 0) {}

RealBall RealBall::from_integer(const PrecisionContext& ctx, const ExactInteger& v)
{
    RealBall b(ctx);
    b.add_rounding_error(mpfr_set_z(b.mid_.get(), v.get_mpz_t(), MPFR_RNDN));
    return b;
}

RealBall RealBall::from_rational(const PrecisionContext& ctx, const ExactRational& v)
{
    RealBall b(ctx);
    b.add_rounding_error(mpfr_set_q(b.mid_.get(), v.get_mpq_t(), MPFR_RNDN));
    return b;
}

RealBall RealBall::from_rational(const PrecisionContext& ctx, const ExactRational& v,
                                 const ExactRational& rad)
{
    return from_rational(ctx, v).widened(rad);
}

void RealBall::add_rounding_error(int ternary)
{
    if (ternary != 0) {
        add_ulp(rad_.get(), mid_.get());
    }
}

void RealBall::add_radius(mpfr_srcptr extra)
{
    mpfr_add(rad_.get(), rad_.get(), extra, MPFR_RNDU);
}

ExactRational RealBall::mid_exact() const { return to_rational(mid_.get()); }
ExactRational RealBall::rad_exact() const { return to_rational(rad_.get()); }
ExactRational RealBall::lower() const { return mid_exact() - rad_exact(); }
ExactRational RealBall::upper() const { return mid_exact() + rad_exact(); }

double RealBall::mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
double RealBall::rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

bool RealBall::excludes_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) > 0; }

bool RealBall::contains(const ExactRational& q) const { return lower() <= q && q <= upper(); }

bool RealBall::contains(const RealBall& inner) const
{
    return lower() <= inner.lower() && inner.upper() <= upper();
}

bool RealBall::overlaps(const RealBall& other) const
{
    return lower() <= other.upper() && other.lower() <= upper();
}

RealBall RealBall::widened(const ExactRational& extra) const
{
    if (extra < 0) {
        throw DomainError("widened: negative radius");
    }
    RealBall r = *this;
    detail::Mpfr e(kRadBits);
    mpfr_set_q(e.get(), extra.get_mpq_t(), MPFR_RNDU);
    r.add_radius(e.get());
    return r;
}

RealBall RealBall::widened(const RealBall& by_radius_of) const
{
    RealBall r = *this;
    r.add_radius(by_radius_of.rad_.get());
    return r;
}

RealBall RealBall::operator-() const
{
    RealBall r = *this;
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

RealBall RealBall::abs() const
{
    RealBall r = *this;
    mpfr_abs(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

RealBall operator+(const RealBall& a, const RealBall& b)
{
    RealBall r(std::max(a.bits(), b.bits()), 0);
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    r.add_rounding_error(mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN));
    return r;
}

RealBall operator-(const RealBall& a, const RealBall& b)
{
    RealBall r(std::max(a.bits(), b.bits()), 0);
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    r.add_rounding_error(mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN));
    return r;
}

RealBall operator*(const RealBall& a, const RealBall& b)
{
    RealBall r(std::max(a.bits(), b.bits()), 0);
    // |a_m| b_r + |b_m| a_r + a_r b_r
    detail::Mpfr t(kRadBits);
    mpfr_mul(t.get(), a.mid_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_abs(t.get(), t.get(), MPFR_RNDU);
    r.add_radius(t.get());
    mpfr_mul(t.get(), b.mid_.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_abs(t.get(), t.get(), MPFR_RNDU);
    r.add_radius(t.get());
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    r.add_radius(t.get());
    r.add_rounding_error(mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN));
    return r;
}

RealBall RealBall::recip() const
{
    if (!excludes_zero()) {
        throw ZeroStraddleError("reciprocal of a ball containing zero");
    }
    RealBall r(bits(), 0);
    if (!is_exact()) {
        // |1/x - 1/m| <= rad / (|m| (|m| - rad)) for |x - m| <= rad < |m|.
        detail::Mpfr gap(kRadBits);
        detail::Mpfr den(kRadBits);
        mpfr_abs(gap.get(), mid_.get(), MPFR_RNDD);
        mpfr_sub(gap.get(), gap.get(), rad_.get(), MPFR_RNDD);
        if (mpfr_sgn(gap.get()) <= 0) {
            // 64-bit rounding ate the gap; the ball is too wide to divide by.
            throw ZeroStraddleError("reciprocal of a ball too close to zero");
        }
        mpfr_abs(den.get(), mid_.get(), MPFR_RNDD);
        mpfr_mul(den.get(), den.get(), gap.get(), MPFR_RNDD);
        mpfr_div(r.rad_.get(), rad_.get(), den.get(), MPFR_RNDU);
    }
    r.add_rounding_error(mpfr_ui_div(r.mid_.get(), 1, mid_.get(), MPFR_RNDN));
    return r;
}

RealBall operator/(const RealBall& a, const RealBall& b)
{
    return a * b.recip();
}

RealBall RealBall::pow(long n) const
{
    if (n < 0) {
        return pow(-n).recip();
    }
    RealBall result(bits(), 0);
    mpfr_set_ui(result.mid_.get(), 1, MPFR_RNDN);
    RealBall base = *this;
    for (unsigned long e = static_cast<unsigned long>(n); e != 0; e >>= 1) {
        if (e & 1UL) {
            result = result * base;
        }
        if (e > 1) {
            base = base * base;
        }
    }
    return result;
}

namespace {

std::string take_string(char* raw)
{
    std::string s = raw ? raw : "";
    mpfr_free_str(raw);
    return s;
}

} // namespace

std::string RealBall::mid_string(int digits) const
{
    if (digits <= 0) {
        digits = static_cast<int>(std::floor((bits() - 8) * 0.30102999566398120));
    }
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*RNe", digits - 1, mid_.get());
    return take_string(raw);
}

std::string RealBall::rad_string() const
{
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.6RUe", rad_.get());
    return take_string(raw);
}

std::string RealBall::certified_fixed(int decimals) const
{
    const long wide = bits() + kRadBits;
    detail::Mpfr lo(wide);
    detail::Mpfr hi(wide);
    mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    char* raw_lo = nullptr;
    char* raw_hi = nullptr;
    mpfr_asprintf(&raw_lo, "%.*RNf", decimals, lo.get());
    mpfr_asprintf(&raw_hi, "%.*RNf", decimals, hi.get());
    std::string slo = take_string(raw_lo);
    std::string shi = take_string(raw_hi);
    // Rounding is monotone, so equal endpoint renderings cover the whole ball.
    return slo == shi ? slo : std::string();
}

RealBall pi(const PrecisionContext& ctx)
{
    RealBall b(ctx);
    b.add_rounding_error(mpfr_const_pi(b.mid_.get(), MPFR_RNDN));
    return b;
}

Comparison compare_to_rational(const RealBall& x, const ExactRational& r)
{
    if (x.upper() < r) {
        return Comparison::CertainlyLess;
    }
    if (x.lower() > r) {
        return Comparison::CertainlyGreater;
    }
    return Comparison::Contains;
}

std::string to_string(Comparison c)
{
    switch (c) {
    case Comparison::CertainlyLess: return "certainly_less";
    case Comparison::CertainlyGreater: return "certainly_greater";
    case Comparison::Contains: return "contains";
    }
    return "unknown";
}

} // namespace zetalab
