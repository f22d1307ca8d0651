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

#ifndef ZETALAB_DIRICHLET_HPP
#define ZETALAB_DIRICHLET_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace zetalab {

/// Real primitive character n -> (D/n) for a fundamental discriminant D,
/// stored as a value table over residues mod |D|.
class DirichletCharacter {
public:
    // Throws UnsupportedModulusError unless D is a fundamental discriminant.
    static DirichletCharacter from_discriminant(long discriminant);

    long modulus() const noexcept { return static_cast<long>(table_.size()); }
    long discriminant() const noexcept { return discriminant_; }
    // Characters whose values run +1, -1, +1, ... on consecutive units
    // (only the mod-4 character among quadratic ones).
    bool is_alternating() const noexcept { return discriminant_ == -4; }

    int operator()(std::uint64_t n) const { return table_[n % table_.size()]; }
    const std::vector<int>& table() const noexcept { return table_; }

private:
    DirichletCharacter(long discriminant, std::vector<int> table)
        : discriminant_(discriminant), table_(std::move(table)) {}

    long discriminant_;
    std::vector<int> table_;
};

// (-1)^((n-1)/2) for odd n, 0 for even n. Throws DomainError for n == 0.
int chi4(std::uint64_t n);

/// The quadratic character modulo q. Supported when exactly one of q, -q is a
/// fundamental discriminant; throws UnsupportedModulusError otherwise
/// (including q = 8, which carries two real primitive characters).
DirichletCharacter quadratic_character(long q);

// sum_{d | n} chi(d), by trial division up to sqrt(n).
long r_divisor(std::uint64_t n, const DirichletCharacter& chi);

// r_divisor(n) for n = 0..max_n (entry 0 unused), via a divisor sieve.
std::vector<std::int32_t> r_divisor_table(std::uint64_t max_n, const DirichletCharacter& chi);

// #{(a, b) in Z^2 : a^2 + b^2 = n}, by enumerating a.
std::uint64_t r_lattice(std::uint64_t n);

struct CountingValue {
    std::uint64_t n;
    long r_divisor;
    std::uint64_t r_lattice;
};

} // namespace zetalab

#endif // ZETALAB_DIRICHLET_HPP
