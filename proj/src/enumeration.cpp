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

#include "pptseq/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "pptseq/checked.hpp"
#include "pptseq/errors.hpp"

namespace pptseq {

using checked::u128;

namespace {

// Smallest key value attained by any triple: (3,4,5).
std::uint64_t smallest_key(OrderingKey key) noexcept
{
    switch (key) {
    case OrderingKey::ByA: return 3;
    case OrderingKey::ByB: return 4;
    case OrderingKey::ByC: return 5;
    }
    return 5;
}

std::uint64_t largest_s(OrderingKey key, std::uint64_t bound)
{
    switch (key) {
    case OrderingKey::ByA: return bound;
    case OrderingKey::ByB: return bound / 2 + 1;
    case OrderingKey::ByC: return checked::isqrt(checked::mul(bound, 2, "2*bound") - 1);
    }
    return 0;
}

// Odd t range [first, last] whose key value is within bound for this s.
std::pair<std::uint64_t, std::uint64_t> t_range(OrderingKey key, std::uint64_t bound,
                                                std::uint64_t s)
{
    const u128 s2 = static_cast<u128>(s) * s;
    std::uint64_t first = 1;
    std::uint64_t last = s - 2;
    switch (key) {
    case OrderingKey::ByA:
        last = std::min(last, bound / s);
        break;
    case OrderingKey::ByB: {
        // (s^2 - t^2)/2 <= bound  <=>  t^2 >= s^2 - 2*bound.
        const u128 twice = static_cast<u128>(bound) * 2;
        if (s2 > twice) {
            const u128 floor_t2 = s2 - twice;
            std::uint64_t t = checked::isqrt(checked::narrow(floor_t2, "t^2"));
            if (static_cast<u128>(t) * t < floor_t2) {
                ++t;
            }
            first = std::max<std::uint64_t>(1, t);
        }
        break;
    }
    case OrderingKey::ByC: {
        // (s^2 + t^2)/2 <= bound  <=>  t^2 <= 2*bound - s^2.
        const u128 twice = static_cast<u128>(bound) * 2;
        last = twice > s2 ? std::min(last, checked::isqrt(checked::narrow(twice - s2))) : 0;
        break;
    }
    }
    if (first % 2 == 0) {
        ++first;
    }
    if (last % 2 == 0) {
        last = last == 0 ? 0 : last - 1;
    }
    return {first, last};
}

void scan_s(OrderingKey key, std::uint64_t bound, std::uint64_t s, std::vector<Ppt>& out)
{
    const auto [first, last] = t_range(key, bound, s);
    for (std::uint64_t t = first; t <= last && last != 0; t += 2) {
        if (std::gcd(s, t) == 1) {
            out.push_back(triple_from_st(StPair(s, t)));
        }
    }
}

// Builds the in-range triple with the largest hypotenuse scale so an
// unrepresentable bound fails before the scan starts.
void probe_extreme(OrderingKey key, std::uint64_t s_max)
{
    std::uint64_t s = s_max % 2 == 1 ? s_max : s_max - 1;
    if (s < 3) {
        return;
    }
    if (key == OrderingKey::ByA) {
        triple_from_st(StPair(s, 1));
    } else if (key == OrderingKey::ByB) {
        triple_from_st(StPair(s, s - 2));
    }
}

void sort_by(std::vector<Ppt>& triples, OrderingKey key)
{
    std::sort(triples.begin(), triples.end(),
              [key](const Ppt& lhs, const Ppt& rhs) { return ordered_before(lhs, rhs, key); });
}

} // namespace

std::uint64_t key_value(const Ppt& triple, OrderingKey key) noexcept
{
    switch (key) {
    case OrderingKey::ByA: return triple.a();
    case OrderingKey::ByB: return triple.b();
    case OrderingKey::ByC: return triple.c();
    }
    return 0;
}

std::string_view to_string(OrderingKey key) noexcept
{
    switch (key) {
    case OrderingKey::ByA: return "a";
    case OrderingKey::ByB: return "b";
    case OrderingKey::ByC: return "c";
    }
    return "?";
}

std::optional<OrderingKey> ordering_from_string(std::string_view text) noexcept
{
    if (text == "a" || text == "A") {
        return OrderingKey::ByA;
    }
    if (text == "b" || text == "B") {
        return OrderingKey::ByB;
    }
    if (text == "c" || text == "C") {
        return OrderingKey::ByC;
    }
    return std::nullopt;
}

bool ordered_before(const Ppt& lhs, const Ppt& rhs, OrderingKey key) noexcept
{
    const auto lk = key_value(lhs, key);
    const auto rk = key_value(rhs, key);
    if (lk != rk) {
        return lk < rk;
    }
    if (lhs.a() != rhs.a()) {
        return lhs.a() < rhs.a();
    }
    return lhs.b() < rhs.b();
}

OrderedPptList enumerate_up_to(OrderingKey key, std::uint64_t bound, unsigned workers)
{
    if (bound < smallest_key(key)) {
        throw DomainError("bound " + std::to_string(bound) + " is below the smallest " +
                          std::string(to_string(key)) + " value " +
                          std::to_string(smallest_key(key)));
    }
    const std::uint64_t s_max = largest_s(key, bound);
    probe_extreme(key, s_max);
    const std::uint64_t odd_count = s_max >= 3 ? (s_max - 3) / 2 + 1 : 0;
    workers = std::max(1U, workers);
    if (workers > odd_count) {
        workers = static_cast<unsigned>(std::max<std::uint64_t>(1, odd_count));
    }

    std::vector<std::vector<Ppt>> partial(workers);
    auto run = [&](unsigned worker) {
        // Worker w takes the odd s values 3 + 2(w + k*workers).
        for (std::uint64_t i = worker; i < odd_count; i += workers) {
            scan_s(key, bound, 3 + 2 * i, partial[worker]);
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::exception_ptr> failures(workers);
        {
            std::vector<std::jthread> threads;
            threads.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                threads.emplace_back([&, w] {
                    try {
                        run(w);
                    } catch (...) {
                        failures[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }

    OrderedPptList out{key, bound, {}};
    std::size_t total = 0;
    for (const auto& part : partial) {
        total += part.size();
    }
    out.triples.reserve(total);
    for (auto& part : partial) {
        out.triples.insert(out.triples.end(), part.begin(), part.end());
    }
    sort_by(out.triples, key);
    return out;
}

OrderedPptList first_n(OrderingKey key, std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("first_n needs n >= 1");
    }
    std::uint64_t bound = std::max(checked::mul(n, 2, "initial bound"), smallest_key(key));
    while (true) {
        auto list = enumerate_up_to(key, bound);
        if (list.triples.size() >= n) {
            // Complete through the n-th key value unless the cut splits a tie.
            std::uint64_t complete = key_value(list.triples[n - 1], key);
            if (list.triples.size() > n && key_value(list.triples[n], key) == complete) {
                --complete;
            }
            list.triples.erase(list.triples.begin() + static_cast<std::ptrdiff_t>(n), list.triples.end());
            list.bound = complete;
            return list;
        }
        bound = checked::mul(bound, 2, "enumeration bound");
    }
}

OrderedPptList brute_force_enumerate(std::uint64_t bound_c)
{
    if (bound_c < 5) {
        throw DomainError("brute-force bound must be >= 5");
    }
    OrderedPptList out{OrderingKey::ByC, bound_c, {}};
    for (std::uint64_t c = 5; c <= bound_c; ++c) {
        const std::uint64_t c2 = checked::mul(c, c, "c^2");
        for (std::uint64_t a = 1; a < c; a += 2) {
            const std::uint64_t b2 = c2 - a * a;
            const std::uint64_t b = checked::isqrt(b2);
            if (b * b == b2 && is_primitive_pythagorean(a, b, c)) {
                out.triples.emplace_back(a, b, c);
            }
        }
    }
    sort_by(out.triples, OrderingKey::ByC);
    return out;
}

std::string_view to_string(SampleMode mode) noexcept
{
    return mode == SampleMode::SharedHypotenuse ? "shared" : "key";
}

std::optional<SampleMode> sample_mode_from_string(std::string_view text) noexcept
{
    if (text == "shared") {
        return SampleMode::SharedHypotenuse;
    }
    if (text == "key") {
        return SampleMode::CompletePerKey;
    }
    return std::nullopt;
}

OrderedPptList sample(OrderingKey key, std::uint64_t n, SampleMode mode)
{
    if (mode == SampleMode::CompletePerKey) {
        return first_n(key, n);
    }
    return reorder(first_n(OrderingKey::ByC, n), key);
}

OrderedPptList reorder(OrderedPptList list, OrderingKey key)
{
    list.key = key;
    sort_by(list.triples, key);
    return list;
}

} // namespace pptseq
