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
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace pptseq {

/// Generator pair of a primitive triple: odd, coprime, s > t >= 1.
class StPair
{
public:
    /// Throws ValidationError unless validate_st(s, t).
    StPair(std::uint64_t s, std::uint64_t t);

    std::uint64_t s() const noexcept { return s_; }
    std::uint64_t t() const noexcept { return t_; }

    auto operator<=>(const StPair&) const = default;

private:
    std::uint64_t s_;
    std::uint64_t t_;
};

/// Primitive Pythagorean triple with fixed roles: a is the odd leg, b the
/// even leg, c the hypotenuse.
class Ppt
{
public:
    /// Throws ValidationError unless is_primitive_pythagorean(a, b, c) with
    /// a odd.
    Ppt(std::uint64_t a, std::uint64_t b, std::uint64_t c);

    std::uint64_t a() const noexcept { return a_; }
    std::uint64_t b() const noexcept { return b_; }
    std::uint64_t c() const noexcept { return c_; }

    /// The unique generator pair: s = sqrt(c + b), t = sqrt(c - b).
    StPair generator() const;

    bool operator==(const Ppt&) const = default;

private:
    std::uint64_t a_;
    std::uint64_t b_;
    std::uint64_t c_;
};

enum class ClassLabel : std::uint8_t { A, B, C, D, E, F };

inline constexpr std::array<ClassLabel, 6> kAllClasses = {
    ClassLabel::A, ClassLabel::B, ClassLabel::C, ClassLabel::D, ClassLabel::E, ClassLabel::F};

constexpr std::size_t index_of(ClassLabel label) noexcept
{
    return static_cast<std::size_t>(label);
}

char to_char(ClassLabel label) noexcept;

/// Parses 'A'..'F' (case-insensitive).
std::optional<ClassLabel> class_from_char(char ch) noexcept;

bool validate_st(std::uint64_t s, std::uint64_t t) noexcept;

/// a = st, b = (s^2 - t^2) / 2, c = (s^2 + t^2) / 2. Throws RangeError when
/// c does not fit in 64 bits.
Ppt triple_from_st(const StPair& pair);

/// (2n+1, 2n^2+2n, 2n^2+2n+1), i.e. triple_from_st(2n+1, 1).
Ppt polynomial_family(std::uint64_t n);

/// Brute-force membership test; accepts legs in either order.
bool is_primitive_pythagorean(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept;

/// Which of the six class definitions hold for `triple`, evaluated
/// independently of each other. Bit i corresponds to kAllClasses[i].
std::bitset<6> matching_classes(const Ppt& triple) noexcept;

/// The six divisibility classes:
///   A: 3|a, 5|c   B: 5|a, 3|b   C: 15|a
///   D: 3|b, 5|c   E: 3|a, 5|b   F: 15|b
/// Throws std::logic_error if the partition fails (never for a valid Ppt).
ClassLabel classify(const Ppt& triple);

/// Classifies an arbitrary (x, y, z) after validating it as a primitive
/// triple with the odd leg first. Throws ValidationError otherwise.
ClassLabel classify(std::uint64_t a, std::uint64_t b, std::uint64_t c);

std::string to_string(const Ppt& triple);

} // namespace pptseq
