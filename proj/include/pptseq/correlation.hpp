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

#include <cstdint>
#include <span>
#include <vector>

#include "pptseq/rational.hpp"

namespace pptseq {

enum class CorrelationKind : std::uint8_t { Auto, Cross };

/// Circular correlation over lags 0..K. values[k] has denominator n.
struct CorrelationProfile
{
    CorrelationKind kind = CorrelationKind::Auto;
    bool circular = true;
    std::size_t n = 0;
    std::vector<Rational> values;

    std::size_t max_lag() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

struct ProfileSummary
{
    Rational zero_lag;
    Rational nonzero_min;
    Rational nonzero_max;
    Rational nonzero_mean;
};

/// min(200, floor(n/2)).
std::size_t default_max_lag(std::size_t n) noexcept;

/// C(k) = (1/n) * sum_i a(i) * a((i + k) mod n), k = 0..max_lag.
/// Throws LengthError when n < 2 or max_lag >= n, RangeError when a sum
/// overflows 64 bits.
CorrelationProfile autocorrelation(std::span<const std::uint64_t> sequence, std::size_t max_lag);

/// Both inputs are cut to m = min(len x, len y), then
/// X(k) = (1/m) * sum_i x(i) * y((i + k) mod m).
CorrelationProfile crosscorrelation(std::span<const std::uint64_t> x,
                                    std::span<const std::uint64_t> y,
                                    std::size_t max_lag);

/// Throws DomainError for a profile without nonzero lags.
ProfileSummary profile_summary(const CorrelationProfile& profile);

} // namespace pptseq
