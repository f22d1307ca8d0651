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

// zetalab command-line front end. Every subcommand prints records as JSON
// lines (or CSV) and links only the C API.
//
// Exit codes: 0 success, 1 a certified check failed, 2 a result could not be
// certified at the working precision, 3 invalid input.

#include "zetalab/zetalab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitInvalid = 3;

long default_precision()
{
    if (const char* env = std::getenv("ZETALAB_PRECISION_BITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
        std::cerr << "warning: ignoring malformed ZETALAB_PRECISION_BITS='" << env << "'\n";
    }
    return 256;
}

class Context {
public:
    Context(long bits, const std::string& format)
    {
        if (zl_context_new(bits, &ctx_) != ZL_OK) {
            throw CLI::ValidationError("--precision", "must be >= 64 bits");
        }
        zl_context_set_format(ctx_, format == "csv" ? ZL_FORMAT_CSV : ZL_FORMAT_JSONL);
    }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
    ~Context() { zl_context_free(ctx_); }

    zl_context* get() const { return ctx_; }

private:
    zl_context* ctx_ = nullptr;
};

// Prints the output string and maps the status to an exit code.
int finish(const Context& ctx, zl_status st, char*& out)
{
    if (out != nullptr) {
        std::fputs(out, stdout);
        zl_string_free(out);
        out = nullptr;
    }
    switch (st) {
    case ZL_OK:
        return 0;
    case ZL_ERR_CHECK_FAILED:
        std::cerr << "check failed: " << zl_last_error(ctx.get()) << '\n';
        return kExitCheckFailed;
    case ZL_ERR_PRECISION:
        std::cerr << "indeterminate: " << zl_last_error(ctx.get());
        if (zl_precision_hint(ctx.get()) > 0) {
            std::cerr << " (hint: --precision " << zl_precision_hint(ctx.get()) << ")";
        }
        std::cerr << '\n';
        return kExitIndeterminate;
    default:
        std::cerr << "error (" << zl_status_name(st) << "): " << zl_last_error(ctx.get()) << '\n';
        return kExitInvalid;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zetalab: certified computations around zeta(s), L(s, chi_4) and their rational approximations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(zl_version()));

    long precision = default_precision();
    std::string format = "jsonl";
    app.add_option("--precision", precision, "working precision in bits (env ZETALAB_PRECISION_BITS)")
        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"jsonl", "csv"}));

    std::function<int(const Context&)> action;

    // const
    std::string kind = "zeta";
    long s = 2;
    int digits = 10;
    auto* c_const = app.add_subcommand("const", "certified decimal value of zeta, beta or their product");
    c_const->add_option("--kind", kind, "zeta | beta | dedekind")
        ->check(CLI::IsMember({"zeta", "beta", "dedekind"}));
    c_const->add_option("--s", s, "argument s");
    c_const->add_option("--digits", digits, "decimals to print")->check(CLI::Range(1, 100000));
    c_const->callback([&] {
        action = [&](const Context& ctx) {
            const zl_const_kind k = kind == "zeta" ? ZL_CONST_ZETA
                                    : kind == "beta" ? ZL_CONST_BETA
                                                     : ZL_CONST_DEDEKIND;
            char* out = nullptr;
            const zl_status st = zl_const(ctx.get(), k, s, digits, &out);
            return finish(ctx, st, out);
        };
    });

    // rn
    unsigned long long max_n = 10;
    bool check_lattice = false;
    auto* c_rn = app.add_subcommand("rn", "two-squares counts r_divisor(n) and r_lattice(n)");
    c_rn->add_option("--max", max_n, "largest n")->check(CLI::Range(1ULL, 100000000ULL));
    c_rn->add_flag("--check-lattice", check_lattice, "fail unless r_lattice = 4 r_divisor");
    c_rn->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            size_t bad = 0;
            const zl_status st = zl_rn(ctx.get(), max_n, check_lattice ? 1 : 0, &out, &bad);
            return finish(ctx, st, out);
        };
    });

    // lemma6
    std::vector<unsigned long long> xs = {1000, 10000, 100000};
    auto* c_l6 = app.add_subcommand("lemma6", "summatory deltas and the fitted correction constant");
    c_l6->add_option("--s", s, "argument s");
    c_l6->add_option("--xs", xs, "cutoffs, comma separated")->delimiter(',');
    c_l6->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            const zl_status st = zl_lemma6(ctx.get(), s, xs.data(), xs.size(), &out);
            return finish(ctx, st, out);
        };
    });

    // cf
    std::string target = "pi";
    std::size_t terms = 20;
    auto* c_cf = app.add_subcommand("cf", "certified continued fraction and convergents");
    c_cf->add_option("--target", target, "pi | zeta | beta | dedekind | inv-beta | inv-zeta | a/b");
    c_cf->add_option("--s", s, "argument s for zeta/beta targets");
    c_cf->add_option("--terms", terms, "maximum partial quotients")->check(CLI::Range(1UL, 1000000UL));
    c_cf->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            const zl_status st = zl_cf(ctx.get(), target.c_str(), s, terms, &out);
            return finish(ctx, st, out);
        };
    });

    // seq17
    std::size_t depth = 8;
    std::string c4 = "1";
    long m0 = 1;
    auto* c_seq = app.add_subcommand("seq17", "combined rational approximations r_mn / s_mn of zeta(s)");
    c_seq->add_option("--s", s, "odd s >= 3 for the intended use; any s >= 2 runs");
    c_seq->add_option("--depth", depth, "convergents per stream")->check(CLI::Range(1UL, 10000UL));
    c_seq->add_option("--c4", c4, "integer c4 >= 1");
    c_seq->add_option("--m0", m0, "row used for the sandwich crossover report");
    c_seq->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            const zl_status st = zl_seq17(ctx.get(), s, depth, depth, c4.c_str(), m0, &out);
            return finish(ctx, st, out);
        };
    });

    // eq10
    std::vector<unsigned long long> eq10_xs;
    auto* c_eq10 = app.add_subcommand("eq10", "|zeta(s) - (p_n/q_n) Z| with the fitted constant c2");
    c_eq10->add_option("--s", s, "argument s");
    c_eq10->add_option("--depth", depth, "convergents of 1/L(s)")->check(CLI::Range(1UL, 10000UL));
    c_eq10->add_option("--xs", eq10_xs, "finite cutoffs, comma separated")->delimiter(',');
    c_eq10->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            const zl_status st = zl_eq10(ctx.get(), s, depth, eq10_xs.data(), eq10_xs.size(), &out);
            return finish(ctx, st, out);
        };
    });

    // case1
    std::string hypothesis = "6/5";
    long m = 1;
    auto* c_case1 = app.add_subcommand("case1", "sandwich crossover under a rational hypothesis for zeta(s)");
    c_case1->add_option("--s", s, "argument s");
    c_case1->add_option("--hypothesis", hypothesis, "assumed value A/B");
    c_case1->add_option("--m", m, "index of the Z convergent a_m/b_m");
    c_case1->add_option("--depth", depth, "convergents of 1/L(s)")->check(CLI::Range(1UL, 10000UL));
    c_case1->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            const zl_status st = zl_case1(ctx.get(), s, hypothesis.c_str(), m, depth, &out);
            return finish(ctx, st, out);
        };
    });

    // beta-mirror
    std::vector<unsigned long long> mirror_xs;
    auto* c_mirror = app.add_subcommand("beta-mirror", "combined approximations of L(s, chi_4), s even");
    c_mirror->add_option("--s", s, "even s >= 2");
    c_mirror->add_option("--depth", depth, "convergents per stream")->check(CLI::Range(1UL, 10000UL));
    c_mirror->add_option("--c4", c4, "integer c4 >= 1");
    c_mirror->add_option("--m0", m0, "row used for the sandwich crossover report");
    c_mirror->add_option("--xs", mirror_xs, "also emit the summatory table at these cutoffs")->delimiter(',');
    c_mirror->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            const zl_status st = zl_beta_mirror(ctx.get(), s, depth, c4.c_str(), m0,
                                         mirror_xs.empty() ? nullptr : mirror_xs.data(),
                                         mirror_xs.size(), &out);
            return finish(ctx, st, out);
        };
    });

    // euler
    unsigned long long prime_bound = 10000;
    auto* c_euler = app.add_subcommand("euler", "finite Euler product against 1/zeta(s)");
    c_euler->add_option("--s", s, "argument s");
    c_euler->add_option("--primes", prime_bound, "prime bound P")->check(CLI::Range(2ULL, 100000000ULL));
    c_euler->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            const zl_status st = zl_euler_product(ctx.get(), s, prime_bound, &out);
            return finish(ctx, st, out);
        };
    });

    // verify
    std::string suite = "all";
    auto* c_verify = app.add_subcommand("verify", "run the acceptance checks");
    c_verify->add_option("--suite", suite, "all, or comma-separated criterion ids");
    c_verify->callback([&] {
        action = [&](const Context& ctx) {
            char* out = nullptr;
            int failed = 0;
            int indeterminate = 0;
            const zl_status st = zl_verify(ctx.get(), suite.c_str(), &out, &failed, &indeterminate);
            const int code = finish(ctx, st, out);
            if (code != 0) {
                return code;
            }
            return failed > 0 ? kExitCheckFailed : indeterminate > 0 ? kExitIndeterminate : 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        Context ctx(precision, format);
        return action(ctx);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
}
