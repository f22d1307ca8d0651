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

// Record serialization shared by the C API and the verification runner.

#ifndef ZETALAB_SRC_REPORT_HPP
#define ZETALAB_SRC_REPORT_HPP

#include "zetalab/approx_seq.hpp"
#include "zetalab/ball.hpp"
#include "zetalab/diophantine.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/lseries.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zetalab::report {

using Row = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum class Format { JsonLines, Csv };

// New row carrying the schema version and record type.
Row make_row(const std::string& record);

// Adds `name` (decimal midpoint string) and `name_radius`.
void put_ball(Row& row, const std::string& name, const RealBall& b);
std::string decimal(double v);

std::string serialize(const std::vector<Row>& rows, Format format);

enum class ConstKind { Zeta, Beta, Dedekind };
ConstKind parse_const_kind(const std::string& text);
std::string to_string(ConstKind kind);

struct ConstValue {
    RealBall value;
    std::string fixed; // certified rendering to the requested decimals
};

// Throws PrecisionError when `digits` decimals cannot be certified.
ConstValue evaluate_const(ConstKind kind, long s, int digits, const PrecisionContext& ctx);

Row const_row(ConstKind kind, long s, int digits, const ConstValue& v);
std::vector<Row> rn_rows(std::uint64_t max_n, bool check_lattice, std::size_t& mismatches);
std::vector<Row> summatory_rows(const SummatoryExperiment& ex);
std::vector<Row> cf_rows(const std::string& target, const RealBall& x, const CFExpansion& cf);
std::vector<Row> combined_rows(const CombinedRun& run, const std::string& record);
Row eq1516_row(const SandwichReport& r, const std::string& record);
std::vector<Row> eq10_rows(const DistanceReport& r);
std::vector<Row> case1_rows(const Case1Report& r);
Row euler_product_row(long s, std::uint64_t bound, const RealBall& product, const RealBall& inv_zeta);

// Named targets of the `cf` command: pi, zeta, beta, dedekind, inv-beta,
// inv-zeta. Literal rationals are expanded exactly by the caller.
RealBall cf_target(const std::string& target, long s, const PrecisionContext& ctx);

} // namespace zetalab::report

#endif // ZETALAB_SRC_REPORT_HPP
