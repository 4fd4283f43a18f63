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

#include <stdexcept>
#include <string>

namespace pptseq {

/// Input violates a domain-type invariant (bad (s,t) pair, malformed triple).
class ValidationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact 64-bit computation would overflow.
class RangeError : public std::range_error
{
public:
    using std::range_error::range_error;
};

/// Request is well-formed but has no meaningful answer: bound below the
/// smallest triple, a class with too few occurrences, a profile with no
/// nonzero lags.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Sequence too short for the requested lag range.
class LengthError : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Gap sequences that do not tile a stream (overlap or hole).
class InconsistencyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace pptseq
