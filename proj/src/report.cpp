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

#include "report.hpp"

#include "zetalab/error.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace zetalab::report {

using zetalab::to_string;

Row make_row(const std::string& record)
{
    Row row;
    row["schema"] = kSchemaVersion;
    row["record"] = record;
    return row;
}

void put_ball(Row& row, const std::string& name, const RealBall& b)
{
    row[name] = b.mid_string();
    row[name + "_radius"] = b.rad_string();
}

std::string decimal(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_cell(const Row& v)
{
    std::string text;
    if (v.is_string()) {
        text = v.get<std::string>();
    } else if (v.is_null()) {
        text = "";
    } else {
        text = v.dump();
    }
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

std::string serialize(const std::vector<Row>& rows, Format format)
{
    std::ostringstream out;
    if (format == Format::JsonLines) {
        for (const auto& row : rows) {
            out << row.dump() << '\n';
        }
        return out.str();
    }
    // CSV: a header line whenever the key set changes.
    std::vector<std::string> header;
    for (const auto& row : rows) {
        std::vector<std::string> keys;
        for (const auto& item : row.items()) {
            keys.push_back(item.key());
        }
        if (keys != header) {
            header = keys;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                out << (i ? "," : "") << keys[i];
            }
            out << '\n';
        }
        std::size_t i = 0;
        for (const auto& item : row.items()) {
            out << (i++ ? "," : "") << csv_cell(item.value());
        }
        out << '\n';
    }
    return out.str();
}

ConstKind parse_const_kind(const std::string& text)
{
    if (text == "zeta") {
        return ConstKind::Zeta;
    }
    if (text == "beta") {
        return ConstKind::Beta;
    }
    if (text == "dedekind") {
        return ConstKind::Dedekind;
    }
    throw DomainError("unknown constant kind '" + text + "' (expected zeta, beta or dedekind)");
}

std::string to_string(ConstKind kind)
{
    switch (kind) {
    case ConstKind::Zeta: return "zeta";
    case ConstKind::Beta: return "beta";
    case ConstKind::Dedekind: return "dedekind";
    }
    return "unknown";
}

ConstValue evaluate_const(ConstKind kind, long s, int digits, const PrecisionContext& ctx)
{
    if (digits < 1) {
        throw DomainError("const: digits must be >= 1");
    }
    RealBall v = kind == ConstKind::Zeta   ? zeta(s, ctx)
                 : kind == ConstKind::Beta ? beta(s, ctx)
                                           : dedekind_product(s, ctx);
    std::string fixed = v.certified_fixed(digits);
    if (fixed.empty()) {
        // Roughly 3.33 bits per decimal digit, plus headroom.
        const long hint = std::max(2 * ctx.working_bits(), static_cast<long>(digits * 3.33) + 64);
        throw PrecisionError("radius " + v.rad_string() + " too large to certify " +
                                 std::to_string(digits) + " digits; try --precision " +
                                 std::to_string(hint),
                             hint);
    }
    return {std::move(v), std::move(fixed)};
}

Row const_row(ConstKind kind, long s, int digits, const ConstValue& v)
{
    Row row = make_row("const");
    row["kind"] = to_string(kind);
    row["s"] = s;
    row["digits"] = digits;
    row["value"] = v.fixed;
    put_ball(row, "ball", v.value);
    return row;
}

std::vector<Row> rn_rows(std::uint64_t max_n, bool check_lattice, std::size_t& mismatches)
{
    const auto chi = quadratic_character(4);
    const auto table = r_divisor_table(max_n, chi);
    std::vector<Row> rows;
    mismatches = 0;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const std::uint64_t lattice = r_lattice(n);
        Row row = make_row("rn");
        row["n"] = n;
        row["r_divisor"] = std::to_string(table[n]);
        row["r_lattice"] = std::to_string(lattice);
        if (check_lattice) {
            const bool ok = static_cast<std::int64_t>(lattice) == 4 * static_cast<std::int64_t>(table[n]);
            row["jacobi_ok"] = ok;
            mismatches += ok ? 0 : 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Row> summatory_rows(const SummatoryExperiment& ex)
{
    std::vector<Row> rows;
    for (std::size_t i = 0; i < ex.records.size(); ++i) {
        const auto& rec = ex.records[i];
        Row row = make_row(ex.name);
        row["s"] = rec.s;
        row["x"] = rec.x;
        put_ball(row, "partial_sum", rec.partial_sum);
        put_ball(row, "delta", rec.delta);
        put_ball(row, "scaled_delta", rec.scaled_delta);
        row["residual_ratio"] = decimal(ex.residual_ratio[i]);
        rows.push_back(std::move(row));
    }
    Row fit = make_row(ex.name + "_fit");
    fit["s"] = ex.s;
    put_ball(fit, "fitted_c0", ex.fitted_c0);
    fit["spread"] = decimal(ex.spread);
    put_ball(fit, "predicted_c0", ex.predicted_c0);
    fit["c0_positive"] = ex.c0_positive;
    if (!ex.c0_positive) {
        fit["note"] = "fitted correction constant is not positive: partial sums undershoot the limit";
    }
    rows.push_back(std::move(fit));
    return rows;
}

std::vector<Row> cf_rows(const std::string& target, const RealBall& x, const CFExpansion& cf)
{
    std::vector<Row> rows;
    const auto convs = cf.partial_quotients.empty() ? std::vector<Convergent>{} : convergents(cf);
    for (std::size_t i = 0; i < convs.size(); ++i) {
        Row row = make_row("cf");
        row["target"] = target;
        row["index"] = convs[i].index;
        row["partial_quotient"] = to_string(cf.partial_quotients[i]);
        row["p"] = to_string(convs[i].p);
        row["q"] = to_string(convs[i].q);
        row["dirichlet"] = to_string(dirichlet_check(x, convs[i]));
        rows.push_back(std::move(row));
    }
    Row summary = make_row("cf_summary");
    summary["target"] = target;
    summary["terms"] = cf.partial_quotients.size();
    summary["termination"] = to_string(cf.termination);
    put_ball(summary, "x", x);
    if (convs.size() >= 2) {
        std::string mu;
        const auto est = mu_estimate(convs);
        if (!est.empty()) {
            mu = decimal(est.back().mu);
        }
        summary["last_mu_estimate"] = mu;
    }
    rows.push_back(std::move(summary));
    return rows;
}

std::vector<Row> combined_rows(const CombinedRun& run, const std::string& record)
{
    std::vector<Row> rows;
    for (const auto& e : run.entries) {
        Row row = make_row(record);
        row["problem"] = run.problem.name;
        row["s"] = run.problem.s;
        row["m"] = e.m;
        row["n"] = e.n;
        row["a_m"] = to_string(e.z_conv.p);
        row["b_m"] = to_string(e.z_conv.q);
        row["p_n"] = to_string(e.inv_conv.p);
        row["q_n"] = to_string(e.inv_conv.q);
        row["c4"] = to_string(e.c4);
        row["r_mn"] = to_string(e.r);
        row["s_mn"] = to_string(e.s);
        put_ball(row, "err", e.err);
        row["identity"] = e.identity_holds;
        row["nonvanishing"] = to_string(e.nonvanishing);
        rows.push_back(std::move(row));
    }
    Row fit = make_row(record + "_fit");
    fit["problem"] = run.problem.name;
    put_ball(fit, "fitted_error_constant", run.fitted_error_constant);
    fit["warnings"] = run.warnings;
    rows.push_back(std::move(fit));
    return rows;
}

namespace {

Row optional_index(const std::optional<long>& v)
{
    return v ? Row(*v) : Row(nullptr);
}

} // namespace

Row eq1516_row(const SandwichReport& r, const std::string& record)
{
    Row row = make_row(record);
    row["m0"] = r.m0;
    row["b_m0"] = to_string(r.b);
    row["c2"] = to_string(r.c2);
    row["c5"] = to_string(r.c5);
    row["threshold"] = r.c5 > 0 ? to_string(r.threshold) : std::string("inf");
    row["crossover_index"] = optional_index(r.crossover_index);
    row["predicted_index"] = optional_index(r.predicted_index);
    row["crossover_matches"] = r.crossover_index == r.predicted_index;
    row["data_violation_index"] = optional_index(r.data_violation_index);
    row["indeterminate"] = r.indeterminate;
    std::vector<std::string> below;
    for (auto v : r.data_below_upper) {
        below.push_back(to_string(v));
    }
    row["data_below_upper"] = below;
    return row;
}

std::vector<Row> eq10_rows(const DistanceReport& r)
{
    std::vector<Row> rows;
    for (const auto& e : r.rows) {
        Row row = make_row("eq10");
        row["problem"] = r.problem;
        row["s"] = r.s;
        row["n"] = e.inv_conv.index;
        row["p_n"] = to_string(e.inv_conv.p);
        row["q_n"] = to_string(e.inv_conv.q);
        put_ball(row, "distance", e.distance);
        put_ball(row, "scaled", e.scaled);
        row["positive"] = to_string(e.positive);
        rows.push_back(std::move(row));
    }
    for (const auto& e : r.finite_rows) {
        Row row = make_row("eq10_finite");
        row["s"] = r.s;
        row["x"] = e.x;
        row["n"] = e.n;
        put_ball(row, "distance", e.distance);
        put_ball(row, "scaled", e.scaled);
        rows.push_back(std::move(row));
    }
    Row fit = make_row("eq10_fit");
    fit["s"] = r.s;
    fit["c2"] = to_string(r.c2);
    fit["indeterminate"] = r.indeterminate;
    if (r.suggested_bits > 0) {
        fit["suggested_bits"] = r.suggested_bits;
    }
    rows.push_back(std::move(fit));
    return rows;
}

std::vector<Row> case1_rows(const Case1Report& r)
{
    std::vector<Row> rows;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& e = r.rows[i];
        Row row = make_row("case1");
        row["s"] = r.s;
        row["n"] = e.n;
        row["q_n"] = to_string(e.q);
        row["lower"] = to_string(e.lower);
        row["upper"] = to_string(e.upper);
        row["bounds_consistent"] = to_string(e.bounds_consistent);
        row["rational_lower_bound_holds"] = static_cast<bool>(r.lower_bound_exact[i]);
        rows.push_back(std::move(row));
    }
    Row summary = make_row("case1_summary");
    summary["s"] = r.s;
    summary["hypothesis"] = to_string(r.hypothesis);
    summary["m"] = r.m;
    summary["a_m"] = to_string(r.z_conv.p);
    summary["b_m"] = to_string(r.z_conv.q);
    summary["c2"] = to_string(r.c2);
    summary["c3"] = to_string(r.c3);
    summary["threshold"] = to_string(r.threshold);
    summary["crossover_index"] = optional_index(r.crossover_index);
    summary["predicted_index"] = optional_index(r.predicted_index);
    summary["crossover_matches"] = r.crossover_index == r.predicted_index;
    rows.push_back(std::move(summary));
    return rows;
}

Row euler_product_row(long s, std::uint64_t bound, const RealBall& product, const RealBall& inv_zeta)
{
    Row row = make_row("euler_product");
    row["s"] = s;
    row["prime_bound"] = bound;
    put_ball(row, "product", product);
    put_ball(row, "inv_zeta", inv_zeta);
    put_ball(row, "gap", (product - inv_zeta).abs());
    return row;
}

RealBall cf_target(const std::string& target, long s, const PrecisionContext& ctx)
{
    if (target == "pi") {
        return pi(ctx);
    }
    if (target == "zeta") {
        return zeta(s, ctx);
    }
    if (target == "beta") {
        return beta(s, ctx);
    }
    if (target == "dedekind") {
        return dedekind_product(s, ctx);
    }
    if (target == "inv-beta") {
        return beta(s, ctx).recip();
    }
    if (target == "inv-zeta") {
        return zeta(s, ctx).recip();
    }
    throw DomainError("unknown cf target '" + target + "'");
}

} // namespace zetalab::report
