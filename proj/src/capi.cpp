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

#include "zetalab/zetalab.h"

#include "report.hpp"
#include "zetalab/approx_seq.hpp"
#include "zetalab/diophantine.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/error.hpp"
#include "zetalab/lseries.hpp"
#include "zetalab/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

struct zl_context {
    zetalab::PrecisionContext precision;
    zetalab::report::Format format = zetalab::report::Format::JsonLines;
    std::string last_error;
    long precision_hint = 0;
};

namespace {

using namespace zetalab;
using report::Row;

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
zl_status guarded(zl_context* ctx, Fn&& fn)
{
    if (ctx == nullptr) {
        return ZL_ERR_INVALID_ARGUMENT;
    }
    ctx->last_error.clear();
    ctx->precision_hint = 0;
    try {
        return fn();
    } catch (const PrecisionError& e) {
        ctx->last_error = e.what();
        ctx->precision_hint = e.suggested_bits();
        return ZL_ERR_PRECISION;
    } catch (const ZeroStraddleError& e) {
        ctx->last_error = e.what();
        return ZL_ERR_ZERO_STRADDLE;
    } catch (const UnsupportedModulusError& e) {
        ctx->last_error = e.what();
        return ZL_ERR_UNSUPPORTED;
    } catch (const DomainError& e) {
        ctx->last_error = e.what();
        return ZL_ERR_DOMAIN;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return ZL_ERR_INTERNAL;
    }
}

zl_status emit(zl_context* ctx, const std::vector<Row>& rows, char** out)
{
    if (out == nullptr) {
        return ZL_ERR_INVALID_ARGUMENT;
    }
    *out = dup_string(report::serialize(rows, ctx->format));
    return ZL_OK;
}

std::vector<std::uint64_t> cutoffs(const unsigned long long* xs, size_t n)
{
    if (n > 0 && xs == nullptr) {
        throw DomainError("cutoff list is null");
    }
    return std::vector<std::uint64_t>(xs, xs + n);
}

ExactInteger parse_c4(const char* c4)
{
    if (c4 == nullptr) {
        return 1;
    }
    const ExactRational v = parse_rational(c4);
    if (v.get_den() != 1) {
        throw DomainError("c4 must be an integer");
    }
    return v.get_num();
}

bool looks_rational(const std::string& t)
{
    return !t.empty() && t.find_first_not_of("-0123456789/") == std::string::npos;
}

void append(std::vector<Row>& dst, std::vector<Row> src)
{
    for (auto& r : src) {
        dst.push_back(std::move(r));
    }
}

} // namespace

extern "C" {

const char* zl_version(void) { return "1.0.0"; }

const char* zl_status_name(zl_status status)
{
    switch (status) {
    case ZL_OK: return "ok";
    case ZL_ERR_DOMAIN: return "domain_error";
    case ZL_ERR_ZERO_STRADDLE: return "zero_straddle";
    case ZL_ERR_UNSUPPORTED: return "unsupported_modulus";
    case ZL_ERR_PRECISION: return "precision_exhausted";
    case ZL_ERR_CHECK_FAILED: return "check_failed";
    case ZL_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ZL_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

zl_status zl_context_new(long working_bits, zl_context** out)
{
    if (out == nullptr) {
        return ZL_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto ctx = std::make_unique<zl_context>();
        if (working_bits != 0) {
            ctx->precision = PrecisionContext(working_bits);
        }
        *out = ctx.release();
        return ZL_OK;
    } catch (const DomainError&) {
        return ZL_ERR_DOMAIN;
    } catch (const std::exception&) {
        return ZL_ERR_INTERNAL;
    }
}

void zl_context_free(zl_context* ctx) { delete ctx; }

long zl_context_bits(const zl_context* ctx) { return ctx ? ctx->precision.working_bits() : 0; }

zl_status zl_context_set_format(zl_context* ctx, zl_format format)
{
    if (ctx == nullptr || (format != ZL_FORMAT_JSONL && format != ZL_FORMAT_CSV)) {
        return ZL_ERR_INVALID_ARGUMENT;
    }
    ctx->format = format == ZL_FORMAT_CSV ? report::Format::Csv : report::Format::JsonLines;
    return ZL_OK;
}

const char* zl_last_error(const zl_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

long zl_precision_hint(const zl_context* ctx) { return ctx ? ctx->precision_hint : 0; }

void zl_string_free(char* s) { std::free(s); }

zl_status zl_chi4(unsigned long long n, int* out)
{
    if (out == nullptr) {
        return ZL_ERR_INVALID_ARGUMENT;
    }
    if (n == 0) {
        return ZL_ERR_DOMAIN;
    }
    *out = chi4(n);
    return ZL_OK;
}

zl_status zl_r_divisor(unsigned long long n, long* out)
{
    if (out == nullptr) {
        return ZL_ERR_INVALID_ARGUMENT;
    }
    if (n == 0) {
        return ZL_ERR_DOMAIN;
    }
    *out = r_divisor(n, quadratic_character(4));
    return ZL_OK;
}

zl_status zl_r_lattice(unsigned long long n, unsigned long long* out)
{
    if (out == nullptr) {
        return ZL_ERR_INVALID_ARGUMENT;
    }
    if (n == 0) {
        return ZL_ERR_DOMAIN;
    }
    *out = r_lattice(n);
    return ZL_OK;
}

zl_status zl_const(zl_context* ctx, zl_const_kind kind, long s, int digits, char** out)
{
    return guarded(ctx, [&] {
        report::ConstKind k;
        switch (kind) {
        case ZL_CONST_ZETA: k = report::ConstKind::Zeta; break;
        case ZL_CONST_BETA: k = report::ConstKind::Beta; break;
        case ZL_CONST_DEDEKIND: k = report::ConstKind::Dedekind; break;
        default: return ZL_ERR_INVALID_ARGUMENT;
        }
        const auto v = report::evaluate_const(k, s, digits, ctx->precision);
        return emit(ctx, {report::const_row(k, s, digits, v)}, out);
    });
}

zl_status zl_rn(zl_context* ctx, unsigned long long max_n, int check_lattice, char** out,
                size_t* mismatches)
{
    return guarded(ctx, [&] {
        if (max_n == 0) {
            throw DomainError("rn: max must be >= 1");
        }
        std::size_t bad = 0;
        const auto rows = report::rn_rows(max_n, check_lattice != 0, bad);
        if (mismatches != nullptr) {
            *mismatches = bad;
        }
        const zl_status st = emit(ctx, rows, out);
        if (st == ZL_OK && bad > 0) {
            ctx->last_error = std::to_string(bad) + " lattice identity mismatches";
            return ZL_ERR_CHECK_FAILED;
        }
        return st;
    });
}

zl_status zl_lemma6(zl_context* ctx, long s, const unsigned long long* xs, size_t n_xs, char** out)
{
    return guarded(ctx, [&] {
        const auto cut = cutoffs(xs, n_xs);
        return emit(ctx, report::summatory_rows(lemma6_experiment(s, cut, ctx->precision)), out);
    });
}

zl_status zl_cf(zl_context* ctx, const char* target, long s, size_t terms, char** out)
{
    return guarded(ctx, [&] {
        if (target == nullptr) {
            return ZL_ERR_INVALID_ARGUMENT;
        }
        const std::string name = target;
        if (looks_rational(name)) {
            const ExactRational q = parse_rational(name);
            const CFExpansion cf = cf_expand(q, terms);
            return emit(ctx, report::cf_rows(name, RealBall::from_rational(ctx->precision, q), cf), out);
        }
        const RealBall x = report::cf_target(name, s, ctx->precision);
        return emit(ctx, report::cf_rows(name, x, cf_expand(x, terms)), out);
    });
}

zl_status zl_seq17(zl_context* ctx, long s, size_t depth_m, size_t depth_n, const char* c4,
                   long m0, char** out)
{
    return guarded(ctx, [&] {
        const CombinedRun run = build_combined(s, depth_m, depth_n, parse_c4(c4), ctx->precision);
        auto rows = report::combined_rows(run, "seq17");
        const long row = std::min<long>(m0, static_cast<long>(run.z_convs.size()) - 1);
        rows.push_back(report::eq1516_row(verify_eq15_16(run, row, ctx->precision), "eq15_16"));
        return emit(ctx, rows, out);
    });
}

zl_status zl_eq10(zl_context* ctx, long s, size_t n_count, const unsigned long long* xs,
                  size_t n_xs, char** out)
{
    return guarded(ctx, [&] {
        const auto cut = cutoffs(xs, n_xs);
        const DistanceReport r = verify_eq10(s, n_count, cut, ctx->precision);
        const zl_status st = emit(ctx, report::eq10_rows(r), out);
        if (st == ZL_OK && r.indeterminate > 0) {
            ctx->precision_hint = r.suggested_bits;
        }
        return st;
    });
}

zl_status zl_case1(zl_context* ctx, long s, const char* hypothesis, long m, size_t n_count,
                   char** out)
{
    return guarded(ctx, [&] {
        if (hypothesis == nullptr) {
            return ZL_ERR_INVALID_ARGUMENT;
        }
        const auto r = case1_experiment(s, parse_rational(hypothesis), m, n_count, ctx->precision);
        return emit(ctx, report::case1_rows(r), out);
    });
}

zl_status zl_beta_mirror(zl_context* ctx, long s, size_t depth, const char* c4, long m0,
                         const unsigned long long* xs, size_t n_xs, char** out)
{
    return guarded(ctx, [&] {
        const MirrorResult res = beta_mirror(s, depth, parse_c4(c4), m0, ctx->precision);
        auto rows = report::combined_rows(res.run, "beta_mirror");
        rows.push_back(report::eq1516_row(res.report, "beta_mirror_eq15_16"));
        if (n_xs > 0) {
            const auto cut = cutoffs(xs, n_xs);
            append(rows, report::summatory_rows(beta_summatory_experiment(s, cut, ctx->precision)));
        }
        return emit(ctx, rows, out);
    });
}

zl_status zl_euler_product(zl_context* ctx, long s, unsigned long long prime_bound, char** out)
{
    return guarded(ctx, [&] {
        const RealBall prod = euler_product_inv_zeta(s, prime_bound, ctx->precision);
        const RealBall inv = zeta(s, ctx->precision).recip();
        return emit(ctx, {report::euler_product_row(s, prime_bound, prod, inv)}, out);
    });
}

zl_status zl_verify(zl_context* ctx, const char* suite, char** out, int* failed, int* indeterminate)
{
    return guarded(ctx, [&] {
        const auto results = run_suite(suite ? suite : "all", ctx->precision);
        std::vector<Row> rows;
        int n_failed = 0;
        int n_indet = 0;
        for (const auto& r : results) {
            Row row = report::make_row("verify");
            row["id"] = r.id;
            row["name"] = r.name;
            row["outcome"] = to_string(r.outcome);
            row["seconds"] = report::decimal(r.seconds);
            row["detail"] = r.detail;
            rows.push_back(std::move(row));
            n_failed += r.outcome == CheckOutcome::Fail ? 1 : 0;
            n_indet += r.outcome == CheckOutcome::Indeterminate ? 1 : 0;
        }
        if (failed != nullptr) {
            *failed = n_failed;
        }
        if (indeterminate != nullptr) {
            *indeterminate = n_indet;
        }
        return emit(ctx, rows, out);
    });
}

} // extern "C"
