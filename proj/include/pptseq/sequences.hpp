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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pptseq/enumeration.hpp"
#include "pptseq/triple.hpp"

namespace pptseq {

/// Class labels of an ordered triple list, position by position.
struct ClassSequence
{
    OrderingKey key = OrderingKey::ByC;
    std::vector<ClassLabel> letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool operator==(const ClassSequence&) const = default;
};

/// Distances between successive occurrences of one class. Positions are
/// 1-based; the first occurrence is kept apart and is not a gap.
struct GapSequence
{
    ClassLabel label = ClassLabel::A;
    OrderingKey key = OrderingKey::ByC;
    std::uint64_t first_position = 1;
    std::vector<std::uint64_t> gaps;

    std::size_t occurrences() const noexcept { return gaps.size() + 1; }
    bool operator==(const GapSequence&) const = default;
};

/// Per-class indicator over stream positions.
struct BinarySequence
{
    ClassLabel label = ClassLabel::A;
    OrderingKey key = OrderingKey::ByC;
    std::vector<std::uint8_t> bits;
};

ClassSequence class_sequence(const OrderedPptList& list);

/// Parses a letter string such as "ABDE"; throws ValidationError on any
/// character outside A-F.
ClassSequence class_sequence_from_string(std::string_view letters,
                                         OrderingKey key = OrderingKey::ByC);
std::string to_string(const ClassSequence& sequence);

/// Throws DomainError if `label` occurs fewer than two times.
GapSequence gap_sequence(const ClassSequence& sequence, ClassLabel label);

/// Like gap_sequence but accepts a single occurrence (empty gaps); nullopt
/// when the label is absent.
std::optional<GapSequence> occurrence_gaps(const ClassSequence& sequence, ClassLabel label);

/// occurrence_gaps for every class present in `sequence`.
std::vector<GapSequence> all_occurrence_gaps(const ClassSequence& sequence);

BinarySequence binary_sequence(const ClassSequence& sequence, ClassLabel label);

/// Rebuilds a stream of `length` letters from per-class gap sequences.
/// Throws InconsistencyError when two classes claim a position, a position
/// is left uncovered, a class appears twice, or an occurrence falls outside
/// [1, length].
ClassSequence reconstruct(std::span<const GapSequence> gaps, std::size_t length);

} // namespace pptseq
