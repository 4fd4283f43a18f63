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

#include <doctest.h>

#include <numeric>
#include <random>

#include "pptseq/errors.hpp"
#include "pptseq/sequences.hpp"
#include "reference_data.hpp"

using namespace pptseq;

namespace {

OrderingKey key_of(char order)
{
    return *ordering_from_string(std::string_view(&order, 1));
}

std::vector<std::uint64_t> head(const std::vector<std::uint64_t>& values, std::size_t n)
{
    return {values.begin(), values.begin() + static_cast<std::ptrdiff_t>(std::min(n, values.size()))};
}

const ClassSequence& shared_stream(OrderingKey key)
{
    static const std::array<ClassSequence, 3> streams = {
        class_sequence(sample(OrderingKey::ByA, 4448, SampleMode::SharedHypotenuse)),
        class_sequence(sample(OrderingKey::ByB, 4448, SampleMode::SharedHypotenuse)),
        class_sequence(sample(OrderingKey::ByC, 4448, SampleMode::SharedHypotenuse)),
    };
    return streams[static_cast<std::size_t>(key)];
}

} // namespace

TEST_CASE("class_sequence prefixes")
{
    CHECK(to_string(class_sequence(first_n(OrderingKey::ByA, 15))) == "ABDEFDCCDFEEDBA");
    CHECK(to_string(class_sequence(first_n(OrderingKey::ByC, 10))) == "ABCDEBECFA");
    CHECK(to_string(class_sequence(first_n(OrderingKey::ByB, 7))) == "ACBBAEE");
}

TEST_CASE("class_sequence_from_string")
{
    CHECK(to_string(class_sequence_from_string("abF")) == "ABF");
    CHECK_THROWS_AS(class_sequence_from_string("ABX"), ValidationError);
}

TEST_CASE("gap_sequence examples")
{
    const auto by_c = class_sequence(first_n(OrderingKey::ByC, 100));
    const auto a_gaps = gap_sequence(by_c, ClassLabel::A);
    CHECK(a_gaps.first_position == 1);
    CHECK(head(a_gaps.gaps, 3) == std::vector<std::uint64_t>{9, 1, 9});

    const auto trivial = gap_sequence(class_sequence_from_string("AA"), ClassLabel::A);
    CHECK(trivial.first_position == 1);
    CHECK(trivial.gaps == std::vector<std::uint64_t>{1});

    const auto by_a = class_sequence(first_n(OrderingKey::ByA, 200));
    CHECK(head(gap_sequence(by_a, ClassLabel::A).gaps, 4) ==
          std::vector<std::uint64_t>{14, 3, 1, 17});

    const auto f_gaps = gap_sequence(shared_stream(OrderingKey::ByB), ClassLabel::F);
    CHECK(head(f_gaps.gaps, 4) == std::vector<std::uint64_t>{1, 1, 1, 30});
}

TEST_CASE("gap_sequence needs two occurrences")
{
    CHECK_THROWS_AS(gap_sequence(class_sequence_from_string("BCD"), ClassLabel::A), DomainError);
    CHECK_THROWS_AS(gap_sequence(class_sequence_from_string("BAD"), ClassLabel::A), DomainError);
    const auto single = occurrence_gaps(class_sequence_from_string("BAD"), ClassLabel::A);
    REQUIRE(single.has_value());
    CHECK(single->first_position == 2);
    CHECK(single->gaps.empty());
    CHECK_FALSE(occurrence_gaps(class_sequence_from_string("BCD"), ClassLabel::A).has_value());
}

TEST_CASE("binary_sequence")
{
    auto bits = [](const BinarySequence& b) {
        std::string out;
        for (const auto bit : b.bits) {
            out.push_back(bit ? '1' : '0');
        }
        return out;
    };
    CHECK(bits(binary_sequence(class_sequence_from_string("ABCDEF"), ClassLabel::A)) == "100000");
    CHECK(bits(binary_sequence(class_sequence(first_n(OrderingKey::ByC, 11)), ClassLabel::A)) ==
          "10000000011");
    CHECK(bits(binary_sequence(class_sequence_from_string("BBB"), ClassLabel::A)) == "000");

    for (const OrderingKey key : {OrderingKey::ByA, OrderingKey::ByB, OrderingKey::ByC}) {
        const auto& stream = shared_stream(key);
        for (const ClassLabel label : kAllClasses) {
            const auto binary = binary_sequence(stream, label);
            const auto ones = std::accumulate(binary.bits.begin(), binary.bits.end(), std::size_t{0});
            REQUIRE(binary.bits.size() == stream.size());
            REQUIRE(ones == gap_sequence(stream, label).gaps.size() + 1);
        }
    }
}

TEST_CASE("first 15 gaps of all 18 listings at 4448 triples")
{
    for (const auto& listing : reference::gap_listings()) {
        CAPTURE(listing.order);
        CAPTURE(listing.label);
        const auto& stream = shared_stream(key_of(listing.order));
        const auto gaps = gap_sequence(stream, *class_from_char(listing.label));
        CHECK(head(gaps.gaps, 15) == head(listing.gaps, 15));
    }
}

TEST_CASE("first 20 gaps: ordering a at c <= 20000, b at c <= 40000, c at 4448 triples")
{
    const auto by_a = class_sequence(reorder(enumerate_up_to(OrderingKey::ByC, 20000), OrderingKey::ByA));
    const auto by_b = class_sequence(reorder(enumerate_up_to(OrderingKey::ByC, 40000), OrderingKey::ByB));
    for (const auto& listing : reference::gap_listings()) {
        CAPTURE(listing.order);
        CAPTURE(listing.label);
        const auto& stream = listing.order == 'a'   ? by_a
                             : listing.order == 'b' ? by_b
                                                    : shared_stream(OrderingKey::ByC);
        const auto gaps = gap_sequence(stream, *class_from_char(listing.label));
        CHECK(head(gaps.gaps, 20) == head(listing.gaps, 20));
    }
}

TEST_CASE("ordering a listings reproduce in full from the c <= 20000 triples")
{
    const auto list = reorder(enumerate_up_to(OrderingKey::ByC, 20000), OrderingKey::ByA);
    CHECK(list.triples.size() == 3186);
    const auto stream = class_sequence(list);
    for (const auto& listing : reference::gap_listings()) {
        if (listing.order != 'a') {
            continue;
        }
        CAPTURE(listing.label);
        const auto gaps = gap_sequence(stream, *class_from_char(listing.label));
        CHECK(head(gaps.gaps, listing.gaps.size()) == listing.gaps);
    }
}

TEST_CASE("ordering c listings for A, B, C reproduce in full at 4448 triples")
{
    for (const auto& listing : reference::gap_listings()) {
        if (listing.order != 'c' || listing.label > 'C') {
            continue;
        }
        CAPTURE(listing.label);
        const auto gaps = gap_sequence(shared_stream(OrderingKey::ByC), *class_from_char(listing.label));
        CHECK(head(gaps.gaps, listing.gaps.size()) == listing.gaps);
    }
}

TEST_CASE("occurrence counts and mean gaps over 4448 triples")
{
    for (const OrderingKey key : {OrderingKey::ByA, OrderingKey::ByB, OrderingKey::ByC}) {
        const auto& stream = shared_stream(key);
        std::size_t total = 0;
        for (const ClassLabel label : kAllClasses) {
            const auto gaps = gap_sequence(stream, label);
            total += gaps.occurrences();
            const double span = static_cast<double>(
                std::accumulate(gaps.gaps.begin(), gaps.gaps.end(), std::uint64_t{0}));
            const double mean = span / static_cast<double>(gaps.gaps.size());
            CAPTURE(to_char(label));
            CHECK(mean >= 5.0);
            CHECK(mean <= 7.0);
        }
        CHECK(total == stream.size());
    }
}

TEST_CASE("reconstruct inverts gap extraction")
{
    const auto stream = class_sequence(first_n(OrderingKey::ByA, 100));
    const auto gaps = all_occurrence_gaps(stream);
    CHECK(gaps.size() == 6);
    CHECK(reconstruct(gaps, stream.size()) == stream);

    const auto big = shared_stream(OrderingKey::ByC);
    CHECK(reconstruct(all_occurrence_gaps(big), big.size()) == big);

    std::mt19937_64 rng(7);
    const std::array<ClassSequence, 3> long_streams = {
        class_sequence(first_n(OrderingKey::ByA, 10000)),
        class_sequence(first_n(OrderingKey::ByB, 10000)),
        class_sequence(first_n(OrderingKey::ByC, 10000)),
    };
    std::uniform_int_distribution<std::size_t> pick_key(0, 2);
    std::uniform_int_distribution<std::size_t> pick_length(1, 10000);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& full = long_streams[pick_key(rng)];
        ClassSequence prefix{full.key, {full.letters.begin(),
                                        full.letters.begin() +
                                            static_cast<std::ptrdiff_t>(pick_length(rng))}};
        REQUIRE(reconstruct(all_occurrence_gaps(prefix), prefix.size()) == prefix);
    }
}

TEST_CASE("reconstruct rejects inconsistent input")
{
    const std::vector<GapSequence> clash = {
        {ClassLabel::A, OrderingKey::ByC, 1, {4}},
        {ClassLabel::B, OrderingKey::ByC, 2, {1, 1, 1}},
    };
    CHECK_THROWS_AS(reconstruct(clash, 5), InconsistencyError);

    const std::vector<GapSequence> hole = {
        {ClassLabel::A, OrderingKey::ByC, 1, {2}},
    };
    CHECK_THROWS_AS(reconstruct(hole, 3), InconsistencyError);

    const std::vector<GapSequence> overrun = {
        {ClassLabel::A, OrderingKey::ByC, 1, {1, 5}},
    };
    CHECK_THROWS_AS(reconstruct(overrun, 3), InconsistencyError);

    const std::vector<GapSequence> twice = {
        {ClassLabel::A, OrderingKey::ByC, 1, {}},
        {ClassLabel::A, OrderingKey::ByC, 2, {}},
    };
    CHECK_THROWS_AS(reconstruct(twice, 2), InconsistencyError);

    const std::vector<GapSequence> mixed = {
        {ClassLabel::A, OrderingKey::ByC, 1, {}},
        {ClassLabel::B, OrderingKey::ByA, 2, {}},
    };
    CHECK_THROWS_AS(reconstruct(mixed, 2), InconsistencyError);

    const std::vector<GapSequence> zero_gap = {
        {ClassLabel::A, OrderingKey::ByC, 1, {0}},
    };
    CHECK_THROWS_AS(reconstruct(zero_gap, 1), InconsistencyError);
}
