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
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pptseq/enumeration.hpp"
#include "pptseq/triple.hpp"

namespace pptseq::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kDomain = 3,
    kIo = 4,
};

enum class OutputFormat : std::uint8_t { Csv, Json };
enum class Domain : std::uint8_t { Gaps, Binary };

struct RunConfig
{
    std::string command;
    OrderingKey key = OrderingKey::ByC;
    std::uint64_t count = 4448;
    std::vector<ClassLabel> classes{kAllClasses.begin(), kAllClasses.end()};
    std::optional<std::size_t> max_lag;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::filesystem::path> output_path;
    std::vector<std::filesystem::path> input_files;
    SampleMode sample = SampleMode::SharedHypotenuse;
    Domain domain = Domain::Gaps;
};

/// Parses "A,D" (case-insensitive, no duplicates). Throws ValidationError.
std::vector<ClassLabel> parse_classes(const std::string& text);

/// One non-negative integer per line; blank lines are skipped.
std::vector<std::uint64_t> read_integer_file(const std::filesystem::path& path);

/// Runs one command line (argv[0] is the program name). Data goes to
/// --out or `out`; diagnostics go to `err`. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pptseq::cli
