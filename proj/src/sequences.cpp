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

#include "pptseq/sequences.hpp"

#include <string>
#include <utility>

#include "pptseq/errors.hpp"

namespace pptseq {

ClassSequence class_sequence(const OrderedPptList& list)
{
    ClassSequence out{list.key, {}};
    out.letters.reserve(list.triples.size());
    for (const Ppt& triple : list.triples) {
        out.letters.push_back(classify(triple));
    }
    return out;
}

ClassSequence class_sequence_from_string(std::string_view letters, OrderingKey key)
{
    ClassSequence out{key, {}};
    out.letters.reserve(letters.size());
    for (const char ch : letters) {
        const auto label = class_from_char(ch);
        if (!label) {
            throw ValidationError(std::string("not a class letter: '") + ch + "'");
        }
        out.letters.push_back(*label);
    }
    return out;
}

std::string to_string(const ClassSequence& sequence)
{
    std::string out;
    out.reserve(sequence.size());
    for (const ClassLabel label : sequence.letters) {
        out.push_back(to_char(label));
    }
    return out;
}

std::optional<GapSequence> occurrence_gaps(const ClassSequence& sequence, ClassLabel label)
{
    std::optional<GapSequence> out;
    std::uint64_t previous = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence.letters[i] != label) {
            continue;
        }
        const std::uint64_t position = i + 1;
        if (!out) {
            out = GapSequence{label, sequence.key, position, {}};
        } else {
            out->gaps.push_back(position - previous);
        }
        previous = position;
    }
    return out;
}

GapSequence gap_sequence(const ClassSequence& sequence, ClassLabel label)
{
    auto out = occurrence_gaps(sequence, label);
    if (!out || out->gaps.empty()) {
        throw DomainError(std::string("class ") + to_char(label) + " occurs " +
                          (out ? "once" : "nowhere") + " in a stream of " +
                          std::to_string(sequence.size()) + "; need at least two occurrences");
    }
    return std::move(*out);
}

std::vector<GapSequence> all_occurrence_gaps(const ClassSequence& sequence)
{
    std::vector<GapSequence> out;
    for (const ClassLabel label : kAllClasses) {
        if (auto gaps = occurrence_gaps(sequence, label)) {
            out.push_back(std::move(*gaps));
        }
    }
    return out;
}

BinarySequence binary_sequence(const ClassSequence& sequence, ClassLabel label)
{
    BinarySequence out{label, sequence.key, {}};
    out.bits.reserve(sequence.size());
    for (const ClassLabel letter : sequence.letters) {
        out.bits.push_back(letter == label ? 1 : 0);
    }
    return out;
}

ClassSequence reconstruct(std::span<const GapSequence> gaps, std::size_t length)
{
    std::vector<std::optional<ClassLabel>> slots(length);
    std::array<bool, kAllClasses.size()> seen{};
    OrderingKey key = gaps.empty() ? OrderingKey::ByC : gaps.front().key;

    for (const GapSequence& sequence : gaps) {
        if (seen[index_of(sequence.label)]) {
            throw InconsistencyError(std::string("class ") + to_char(sequence.label) +
                                     " supplied twice");
        }
        seen[index_of(sequence.label)] = true;
        if (sequence.key != key) {
            throw InconsistencyError("gap sequences come from different orderings");
        }

        std::uint64_t position = sequence.first_position;
        auto claim = [&] {
            if (position < 1 || position > length) {
                throw InconsistencyError(std::string("class ") + to_char(sequence.label) +
                                         " reaches position " + std::to_string(position) +
                                         " outside 1.." + std::to_string(length));
            }
            auto& slot = slots[position - 1];
            if (slot) {
                throw InconsistencyError("position " + std::to_string(position) +
                                         " claimed by both " + to_char(*slot) + " and " +
                                         to_char(sequence.label));
            }
            slot = sequence.label;
        };
        claim();
        for (const std::uint64_t gap : sequence.gaps) {
            if (gap == 0 || gap > length) {
                throw InconsistencyError("gap " + std::to_string(gap) + " out of range");
            }
            position += gap;
            claim();
        }
    }

    ClassSequence out{key, {}};
    out.letters.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        if (!slots[i]) {
            throw InconsistencyError("position " + std::to_string(i + 1) + " is not covered");
        }
        out.letters.push_back(*slots[i]);
    }
    return out;
}

} // namespace pptseq
