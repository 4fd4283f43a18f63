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
#include <optional>
#include <string_view>
#include <vector>

#include "pptseq/triple.hpp"

namespace pptseq {

enum class OrderingKey : std::uint8_t { ByA, ByB, ByC };

std::uint64_t key_value(const Ppt& triple, OrderingKey key) noexcept;

/// "a", "b" or "c".
std::string_view to_string(OrderingKey key) noexcept;
std::optional<OrderingKey> ordering_from_string(std::string_view text) noexcept;

/// Strict total order: key field, then a, then b.
bool ordered_before(const Ppt& lhs, const Ppt& rhs, OrderingKey key) noexcept;

/// Triples sorted by `key`. `bound` is the largest key value the list is
/// guaranteed complete for.
struct OrderedPptList
{
    OrderingKey key = OrderingKey::ByC;
    std::uint64_t bound = 0;
    std::vector<Ppt> triples;
};

/// Every PPT whose key field is <= bound, sorted. `workers` splits the
/// generator scan across threads; output is identical for any worker count.
///
/// Scan limits (t ranges over odd values below s):
///   ByC: c >= (s^2 + 1) / 2, so s^2 <= 2*bound - 1.
///   ByA: a >= s (t = 1), so s <= bound.
///   ByB: b is smallest at t = s - 2 where b = 2s - 2, so s <= bound/2 + 1.
///
/// Throws DomainError for bound < 5 (ByB allows bound >= 4, the smallest
/// even leg) and RangeError if a scanned triple overflows.
OrderedPptList enumerate_up_to(OrderingKey key, std::uint64_t bound, unsigned workers = 1);

/// The first n triples of the unbounded ordering. The bound starts at 2n and
/// doubles until at least n triples are found.
OrderedPptList first_n(OrderingKey key, std::uint64_t n);

/// Leg-pair scan over all a, b < bound_c filtered by
/// is_primitive_pythagorean; sorted ByC. O(bound_c^2), for tests.
OrderedPptList brute_force_enumerate(std::uint64_t bound_c);

/// How an n-triple analysis sample is drawn.
enum class SampleMode : std::uint8_t {
    /// One set of triples (the first n by hypotenuse), re-sorted by each key.
    SharedHypotenuse,
    /// first_n(key, n): complete under the key itself.
    CompletePerKey,
};

std::string_view to_string(SampleMode mode) noexcept;
std::optional<SampleMode> sample_mode_from_string(std::string_view text) noexcept;

/// n triples ordered by `key` under the chosen sampling mode. For
/// SharedHypotenuse the returned bound is the hypotenuse bound.
OrderedPptList sample(OrderingKey key, std::uint64_t n, SampleMode mode);

/// Re-sorts `list` under another key. The result keeps `list.bound`.
OrderedPptList reorder(OrderedPptList list, OrderingKey key);

} // namespace pptseq
