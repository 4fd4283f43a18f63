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

#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>

#include "pptseq/errors.hpp"

namespace pptseq::checked {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

inline u64 add(u64 lhs, u64 rhs, std::string_view what = "addition")
{
    u64 out;
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw RangeError(std::string(what) + " overflows 64 bits");
    }
    return out;
}

inline u64 mul(u64 lhs, u64 rhs, std::string_view what = "multiplication")
{
    u64 out;
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw RangeError(std::string(what) + " overflows 64 bits");
    }
    return out;
}

inline u64 narrow(u128 value, std::string_view what = "value")
{
    if (value > std::numeric_limits<u64>::max()) {
        throw RangeError(std::string(what) + " exceeds 64 bits");
    }
    return static_cast<u64>(value);
}

/// floor(sqrt(n)), exact for every 64-bit input.
inline u64 isqrt(u64 n)
{
    auto root = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(root) * root > n) {
        --root;
    }
    while (static_cast<u128>(root + 1) * (root + 1) <= n) {
        ++root;
    }
    return root;
}

} // namespace pptseq::checked
