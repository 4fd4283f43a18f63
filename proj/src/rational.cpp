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

#include "pptseq/rational.hpp"

#include <algorithm>
#include <vector>

#include "pptseq/checked.hpp"
#include "pptseq/errors.hpp"

namespace pptseq {

using checked::u128;

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator)
    : num_{numerator}, den_{denominator}
{
    if (denominator == 0) {
        throw DomainError("zero denominator");
    }
}

double Rational::to_double() const noexcept
{
    // Integer part first keeps large quotients exact to double precision.
    const std::uint64_t whole = num_ / den_;
    const std::uint64_t rem = num_ % den_;
    return static_cast<double>(whole) +
           static_cast<double>(rem) / static_cast<double>(den_);
}

std::string Rational::to_decimal(int significant) const
{
    if (significant < 1) {
        throw DomainError("need at least one significant digit");
    }
    const auto wanted = static_cast<std::size_t>(significant);
    if (num_ == 0) {
        return wanted == 1 ? "0" : "0." + std::string(wanted - 1, '0');
    }

    // Decimal expansion as one digit stream: integer digits (none when the
    // value is below one) followed by fraction digits produced on demand.
    std::vector<int> digits;
    for (std::uint64_t whole = num_ / den_; whole != 0; whole /= 10) {
        digits.push_back(static_cast<int>(whole % 10));
    }
    std::reverse(digits.begin(), digits.end());
    std::size_t int_len = digits.size();
    std::uint64_t rem = num_ % den_;
    auto push_fraction_digit = [&] {
        const u128 scaled = static_cast<u128>(rem) * 10;
        rem = static_cast<std::uint64_t>(scaled % den_);
        digits.push_back(static_cast<int>(scaled / den_));
    };

    std::size_t lead = 0;
    if (int_len == 0) {
        do {
            push_fraction_digit();
        } while (digits.back() == 0);
        lead = digits.size() - 1;
    }

    const std::size_t cut = lead + wanted;
    while (digits.size() < cut + 1) {
        push_fraction_digit();
    }
    bool carry = digits[cut] >= 5;
    digits.resize(cut);
    for (std::size_t i = cut; i-- > 0 && carry;) {
        carry = ++digits[i] == 10;
        if (carry) {
            digits[i] = 0;
        } else if (i < lead) {
            // 0.0999.. -> 0.1000..: the leading digit moved one place left.
            digits.pop_back();
        }
    }
    if (carry) {
        // Every kept digit was 9: the value gains an integer digit.
        digits.insert(digits.begin(), 1);
        int_len = int_len == 0 ? 1 : int_len + 1;
        if (digits.size() > int_len) {
            digits.pop_back();
        }
    }
    // Integer positions beyond the significant window.
    while (digits.size() < int_len) {
        digits.push_back(0);
    }

    std::string out;
    if (int_len == 0) {
        out = "0";
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i == int_len && i != 0) {
            out.push_back('.');
        } else if (i == 0 && int_len == 0) {
            out.push_back('.');
        }
        out.push_back(static_cast<char>('0' + digits[i]));
    }
    return out;
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept
{
    return static_cast<u128>(lhs.num_) * rhs.den_ == static_cast<u128>(rhs.num_) * lhs.den_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept
{
    return static_cast<u128>(lhs.num_) * rhs.den_ <=> static_cast<u128>(rhs.num_) * lhs.den_;
}

} // namespace pptseq
