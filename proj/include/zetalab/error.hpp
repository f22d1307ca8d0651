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

#ifndef ZETALAB_ERROR_HPP
#define ZETALAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zetalab {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Division by a ball that contains zero.
class ZeroStraddleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedModulusError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A result could not be certified at the working precision.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, long suggested_bits)
        : std::runtime_error(what), suggested_bits_(suggested_bits) {}

    long suggested_bits() const noexcept { return suggested_bits_; }

private:
    long suggested_bits_;
};

} // namespace zetalab

#endif // ZETALAB_ERROR_HPP
