// Copyright 2026 The pptseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pptseq {

/// Non-negative exact fraction. Not kept in lowest terms; comparisons are
/// by value.
class Rational
{
public:
    Rational() = default;
    /// Throws DomainError for a zero denominator.
    Rational(std::uint64_t numerator, std::uint64_t denominator);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    double to_double() const noexcept;

    /// Rounds half up to `significant` digits, positional notation only:
    /// 36 -> "36.0000000000", 1/3 -> "0.333333333333".
    std::string to_decimal(int significant = 12) const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

} // namespace pptseq
