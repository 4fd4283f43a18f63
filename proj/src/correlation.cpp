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

#include "pptseq/correlation.hpp"

#include <algorithm>
#include <string>

#include "pptseq/checked.hpp"
#include "pptseq/errors.hpp"

namespace pptseq {

namespace {

void check_lengths(std::size_t n, std::size_t max_lag)
{
    if (n < 2) {
        throw LengthError("correlation needs at least 2 values, got " + std::to_string(n));
    }
    if (max_lag >= n) {
        throw LengthError("max lag " + std::to_string(max_lag) + " must be below length " +
                          std::to_string(n));
    }
}

std::uint64_t circular_dot(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y,
                           std::size_t lag)
{
    const std::size_t n = x.size();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + lag < n ? i + lag : i + lag - n;
        sum = checked::add(sum, checked::mul(x[i], y[j], "correlation product"),
                           "correlation sum");
    }
    return sum;
}

CorrelationProfile correlate(CorrelationKind kind, std::span<const std::uint64_t> x,
                             std::span<const std::uint64_t> y, std::size_t max_lag)
{
    CorrelationProfile out;
    out.kind = kind;
    out.n = x.size();
    out.values.reserve(max_lag + 1);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        out.values.emplace_back(circular_dot(x, y, lag), out.n);
    }
    return out;
}

} // namespace

std::size_t default_max_lag(std::size_t n) noexcept
{
    return std::min<std::size_t>(200, n / 2);
}

CorrelationProfile autocorrelation(std::span<const std::uint64_t> sequence, std::size_t max_lag)
{
    check_lengths(sequence.size(), max_lag);
    return correlate(CorrelationKind::Auto, sequence, sequence, max_lag);
}

CorrelationProfile crosscorrelation(std::span<const std::uint64_t> x,
                                    std::span<const std::uint64_t> y,
                                    std::size_t max_lag)
{
    if (x.size() < 2 || y.size() < 2) {
        throw LengthError("cross-correlation needs at least 2 values in each sequence");
    }
    const std::size_t m = std::min(x.size(), y.size());
    check_lengths(m, max_lag);
    return correlate(CorrelationKind::Cross, x.first(m), y.first(m), max_lag);
}

ProfileSummary profile_summary(const CorrelationProfile& profile)
{
    if (profile.values.size() < 2) {
        throw DomainError("profile has no nonzero lags");
    }
    const auto nonzero = std::span(profile.values).subspan(1);
    const auto [lo, hi] = std::minmax_element(nonzero.begin(), nonzero.end());

    // All values share the denominator n.
    std::uint64_t total = 0;
    for (const Rational& value : nonzero) {
        total = checked::add(total, value.numerator(), "summary total");
    }
    const std::uint64_t denominator =
        checked::mul(profile.values.front().denominator(), nonzero.size(), "summary denominator");

    return ProfileSummary{profile.values.front(), *lo, *hi, Rational(total, denominator)};
}

} // namespace pptseq
