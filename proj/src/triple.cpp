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

#include "pptseq/triple.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pptseq/checked.hpp"
#include "pptseq/errors.hpp"

namespace pptseq {

using checked::u128;

StPair::StPair(std::uint64_t s, std::uint64_t t) : s_{s}, t_{t}
{
    if (!validate_st(s, t)) {
        throw ValidationError("invalid generator pair (s=" + std::to_string(s) + ", t=" +
                              std::to_string(t) + "): need odd coprime s > t >= 1");
    }
}

Ppt::Ppt(std::uint64_t a, std::uint64_t b, std::uint64_t c) : a_{a}, b_{b}, c_{c}
{
    if (a % 2 == 0 || !is_primitive_pythagorean(a, b, c)) {
        throw ValidationError("not a primitive Pythagorean triple with odd leg first: " +
                              to_string(*this));
    }
}

StPair Ppt::generator() const
{
    // c + b = s^2 and c - b = t^2; c + b can exceed 64 bits.
    const u128 square = static_cast<u128>(c_) + b_;
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(square)));
    while (static_cast<u128>(root) * root > square) {
        --root;
    }
    while (static_cast<u128>(root + 1) * (root + 1) <= square) {
        ++root;
    }
    return StPair(root, checked::isqrt(c_ - b_));
}

char to_char(ClassLabel label) noexcept
{
    return static_cast<char>('A' + index_of(label));
}

std::optional<ClassLabel> class_from_char(char ch) noexcept
{
    if (ch >= 'a' && ch <= 'f') {
        ch = static_cast<char>(ch - 'a' + 'A');
    }
    if (ch < 'A' || ch > 'F') {
        return std::nullopt;
    }
    return static_cast<ClassLabel>(ch - 'A');
}

bool validate_st(std::uint64_t s, std::uint64_t t) noexcept
{
    return t >= 1 && s > t && s % 2 == 1 && t % 2 == 1 && std::gcd(s, t) == 1;
}

Ppt triple_from_st(const StPair& pair)
{
    const u128 s = pair.s();
    const u128 t = pair.t();
    const u128 s2 = s * s;
    const u128 t2 = t * t;
    const std::uint64_t c = checked::narrow((s2 + t2) / 2, "hypotenuse");
    // a < c and b < c once c fits.
    return Ppt(static_cast<std::uint64_t>(s * t), static_cast<std::uint64_t>((s2 - t2) / 2), c);
}

Ppt polynomial_family(std::uint64_t n)
{
    if (n == 0) {
        throw ValidationError("polynomial family index must be >= 1");
    }
    const std::uint64_t s = checked::add(checked::mul(n, 2, "2n"), 1, "2n+1");
    return triple_from_st(StPair(s, 1));
}

bool is_primitive_pythagorean(std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept
{
    if (a == 0 || b == 0 || c == 0) {
        return false;
    }
    // c < 2^64 so c^2 < 2^128; a^2 + b^2 can carry past 2^128 only if it
    // already exceeds c^2.
    const u128 a2 = static_cast<u128>(a) * a;
    const u128 b2 = static_cast<u128>(b) * b;
    const u128 c2 = static_cast<u128>(c) * c;
    const u128 sum = a2 + b2;
    if (sum < a2 || sum != c2) {
        return false;
    }
    return std::gcd(a, b) == 1;
}

std::bitset<6> matching_classes(const Ppt& triple) noexcept
{
    const bool a3 = triple.a() % 3 == 0;
    const bool a5 = triple.a() % 5 == 0;
    const bool b3 = triple.b() % 3 == 0;
    const bool b5 = triple.b() % 5 == 0;
    const bool c5 = triple.c() % 5 == 0;

    std::bitset<6> out;
    out[index_of(ClassLabel::A)] = a3 && c5;
    out[index_of(ClassLabel::B)] = a5 && b3;
    out[index_of(ClassLabel::C)] = a3 && a5;
    out[index_of(ClassLabel::D)] = b3 && c5;
    out[index_of(ClassLabel::E)] = a3 && b5;
    out[index_of(ClassLabel::F)] = b3 && b5;
    return out;
}

ClassLabel classify(const Ppt& triple)
{
    const auto matches = matching_classes(triple);
    if (matches.count() != 1) {
        throw std::logic_error("class partition violated for " + to_string(triple));
    }
    for (const ClassLabel label : kAllClasses) {
        if (matches[index_of(label)]) {
            return label;
        }
    }
    throw std::logic_error("unreachable");
}

ClassLabel classify(std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    return classify(Ppt(a, b, c));
}

std::string to_string(const Ppt& triple)
{
    return "(" + std::to_string(triple.a()) + "," + std::to_string(triple.b()) + "," +
           std::to_string(triple.c()) + ")";
}

} // namespace pptseq
