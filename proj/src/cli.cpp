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

#include "pptseq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "pptseq/correlation.hpp"
#include "pptseq/errors.hpp"
#include "pptseq/sequences.hpp"

namespace pptseq::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string_view to_string(OutputFormat format)
{
    return format == OutputFormat::Csv ? "csv" : "json";
}

std::string_view to_string(Domain domain)
{
    return domain == Domain::Gaps ? "gaps" : "binary";
}

std::string class_name(ClassLabel label)
{
    return std::string(1, to_char(label));
}

std::string quoted(const std::string& text)
{
    std::string out = "\"";
    for (const char ch : text) {
        if (ch == '"') {
            out.push_back('"');
        }
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::uint64_t>& values, char separator)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out.push_back(separator);
        }
        out += std::to_string(values[i]);
    }
    return out;
}

ordered_json config_json(const RunConfig& config)
{
    ordered_json classes = ordered_json::array();
    for (const ClassLabel label : config.classes) {
        classes.push_back(class_name(label));
    }
    ordered_json inputs = ordered_json::array();
    for (const auto& path : config.input_files) {
        inputs.push_back(path.string());
    }
    ordered_json out;
    out["command"] = config.command;
    out["order"] = std::string(pptseq::to_string(config.key));
    out["count"] = config.count;
    out["classes"] = classes;
    out["max_lag"] = config.max_lag ? ordered_json(*config.max_lag) : ordered_json(nullptr);
    out["format"] = std::string(to_string(config.format));
    out["sample"] = std::string(pptseq::to_string(config.sample));
    out["domain"] = std::string(to_string(config.domain));
    out["input_files"] = inputs;
    return out;
}

std::string json_document(const RunConfig& config, ordered_json records)
{
    ordered_json doc;
    doc["config"] = config_json(config);
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

OrderedPptList load_sample(const RunConfig& config)
{
    return sample(config.key, config.count, config.sample);
}

// --- generate -------------------------------------------------------------

std::string cmd_generate(const RunConfig& config)
{
    const auto list = load_sample(config);
    if (config.format == OutputFormat::Csv) {
        std::string out = "index,a,b,c,s,t,class\n";
        std::size_t index = 1;
        for (const Ppt& triple : list.triples) {
            const StPair st = triple.generator();
            out += std::to_string(index++) + "," + std::to_string(triple.a()) + "," +
                   std::to_string(triple.b()) + "," + std::to_string(triple.c()) + "," +
                   std::to_string(st.s()) + "," + std::to_string(st.t()) + "," +
                   class_name(classify(triple)) + "\n";
        }
        return out;
    }
    ordered_json records = ordered_json::array();
    std::size_t index = 1;
    for (const Ppt& triple : list.triples) {
        const StPair st = triple.generator();
        ordered_json row;
        row["index"] = index++;
        row["a"] = triple.a();
        row["b"] = triple.b();
        row["c"] = triple.c();
        row["s"] = st.s();
        row["t"] = st.t();
        row["class"] = class_name(classify(triple));
        records.push_back(std::move(row));
    }
    return json_document(config, std::move(records));
}

// --- gaps -----------------------------------------------------------------

struct GapsResult
{
    std::string text;
    bool any_failed = false;
};

GapsResult cmd_gaps(const RunConfig& config, std::ostream& err)
{
    const auto letters = class_sequence(load_sample(config));
    GapsResult result;
    std::string csv = "class,key,first_position,gaps,error\n";
    ordered_json records = ordered_json::array();
    const std::string key(pptseq::to_string(config.key));

    for (const ClassLabel label : config.classes) {
        ordered_json record;
        record["class"] = class_name(label);
        record["key"] = key;
        try {
            const GapSequence gaps = gap_sequence(letters, label);
            csv += class_name(label) + "," + key + "," + std::to_string(gaps.first_position) +
                   "," + quoted(join(gaps.gaps, ' ')) + ",\n";
            record["first_position"] = gaps.first_position;
            record["gaps"] = gaps.gaps;
        } catch (const DomainError& e) {
            result.any_failed = true;
            err << "pptseq: " << e.what() << "\n";
            csv += class_name(label) + "," + key + ",," + quoted("") + "," + quoted(e.what()) +
                   "\n";
            record["error"] = e.what();
        }
        records.push_back(std::move(record));
    }
    result.text = config.format == OutputFormat::Csv ? csv : json_document(config, records);
    return result;
}

// --- binary ---------------------------------------------------------------

std::string cmd_binary(const RunConfig& config)
{
    const auto letters = class_sequence(load_sample(config));
    std::string csv = "class,key,ones,bits\n";
    ordered_json records = ordered_json::array();
    const std::string key(pptseq::to_string(config.key));

    for (const ClassLabel label : config.classes) {
        const auto binary = binary_sequence(letters, label);
        std::string bits;
        std::size_t ones = 0;
        for (const auto bit : binary.bits) {
            bits.push_back(bit ? '1' : '0');
            ones += bit;
        }
        csv += class_name(label) + "," + key + "," + std::to_string(ones) + "," + bits + "\n";
        ordered_json record;
        record["class"] = class_name(label);
        record["key"] = key;
        record["ones"] = ones;
        record["bits"] = bits;
        records.push_back(std::move(record));
    }
    return config.format == OutputFormat::Csv ? csv : json_document(config, records);
}

// --- autocorr / crosscorr -------------------------------------------------

struct Series
{
    std::string name;
    std::vector<std::uint64_t> values;
};

struct ProfileRecord
{
    std::string name;
    CorrelationProfile profile;
};

Series class_series(const ClassSequence& letters, ClassLabel label, Domain domain)
{
    Series out{class_name(label), {}};
    if (domain == Domain::Gaps) {
        out.values = gap_sequence(letters, label).gaps;
    } else {
        const auto binary = binary_sequence(letters, label);
        out.values.assign(binary.bits.begin(), binary.bits.end());
    }
    return out;
}

std::vector<Series> input_series(const RunConfig& config)
{
    std::vector<Series> out;
    for (const auto& path : config.input_files) {
        out.push_back(Series{path.filename().string(), read_integer_file(path)});
    }
    return out;
}

std::string render_profiles(const RunConfig& config, const std::vector<ProfileRecord>& profiles)
{
    if (config.format == OutputFormat::Csv) {
        std::string lags = "series,lag,value\n";
        std::string summaries = "series,zero_lag,nonzero_min,nonzero_max,nonzero_mean\n";
        for (const auto& [name, profile] : profiles) {
            for (std::size_t lag = 0; lag < profile.values.size(); ++lag) {
                lags += name + "," + std::to_string(lag) + "," +
                        profile.values[lag].to_decimal() + "\n";
            }
            if (profile.max_lag() > 0) {
                const auto s = profile_summary(profile);
                summaries += name + "," + s.zero_lag.to_decimal() + "," +
                             s.nonzero_min.to_decimal() + "," + s.nonzero_max.to_decimal() +
                             "," + s.nonzero_mean.to_decimal() + "\n";
            } else {
                summaries += name + "," + profile.values.front().to_decimal() + ",,,\n";
            }
        }
        return lags + "\n" + summaries;
    }

    ordered_json records = ordered_json::array();
    for (const auto& [name, profile] : profiles) {
        ordered_json values = ordered_json::array();
        for (const Rational& value : profile.values) {
            values.push_back(value.to_decimal());
        }
        ordered_json record;
        record["series"] = name;
        record["kind"] = profile.kind == CorrelationKind::Auto ? "auto" : "cross";
        record["circular"] = profile.circular;
        record["n"] = profile.n;
        record["max_lag"] = profile.max_lag();
        record["values"] = std::move(values);
        if (profile.max_lag() > 0) {
            const auto s = profile_summary(profile);
            record["summary"] = {{"zero_lag", s.zero_lag.to_decimal()},
                                 {"nonzero_min", s.nonzero_min.to_decimal()},
                                 {"nonzero_max", s.nonzero_max.to_decimal()},
                                 {"nonzero_mean", s.nonzero_mean.to_decimal()}};
        } else {
            record["summary"] = nullptr;
        }
        records.push_back(std::move(record));
    }
    return json_document(config, std::move(records));
}

std::string cmd_autocorr(const RunConfig& config)
{
    std::vector<Series> series;
    if (!config.input_files.empty()) {
        if (config.input_files.size() != 1) {
            throw UsageError("autocorr takes at most one --input-file");
        }
        series = input_series(config);
    } else {
        const auto letters = class_sequence(load_sample(config));
        for (const ClassLabel label : config.classes) {
            series.push_back(class_series(letters, label, config.domain));
        }
    }

    std::vector<ProfileRecord> profiles;
    for (const auto& [name, values] : series) {
        const std::size_t lag = config.max_lag.value_or(default_max_lag(values.size()));
        profiles.push_back({name, autocorrelation(values, lag)});
    }
    return render_profiles(config, profiles);
}

std::string cmd_crosscorr(const RunConfig& config)
{
    std::vector<Series> pair;
    if (!config.input_files.empty()) {
        if (config.input_files.size() != 2) {
            throw UsageError("crosscorr needs exactly two --input-file arguments");
        }
        pair = input_series(config);
    } else {
        if (config.classes.size() != 2) {
            throw UsageError("crosscorr needs a class pair, e.g. --classes A,D");
        }
        const auto letters = class_sequence(load_sample(config));
        pair.push_back(class_series(letters, config.classes[0], config.domain));
        pair.push_back(class_series(letters, config.classes[1], config.domain));
    }

    const std::size_t m = std::min(pair[0].values.size(), pair[1].values.size());
    const std::size_t lag = config.max_lag.value_or(default_max_lag(m));
    std::vector<ProfileRecord> profiles;
    profiles.push_back(
        {pair[0].name + ":" + pair[1].name, crosscorrelation(pair[0].values, pair[1].values, lag)});
    return render_profiles(config, profiles);
}

// --- output ---------------------------------------------------------------

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    file << text;
    file.close();
    if (!file) {
        throw IoError("failed writing " + path.string());
    }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out, int argc,
          const char* const* argv)
{
    if (!config.output_path) {
        out << text;
        return;
    }
    write_file(*config.output_path, text);

    ordered_json meta;
    meta["tool"] = "pptseq";
    meta["version"] = kVersion;
    meta["generated_at"] = utc_timestamp();
    meta["argv"] = std::vector<std::string>(argv, argv + argc);
    meta["output"] = config.output_path->string();
    meta["bytes"] = text.size();
    auto sidecar = *config.output_path;
    sidecar += ".meta.json";
    write_file(sidecar, meta.dump(2) + "\n");
}

void add_common_options(CLI::App& sub, RunConfig& config, std::string& order, std::string& classes,
                        std::string& format, std::string& sample_mode, std::string& out_path,
                        std::vector<std::string>& inputs)
{
    sub.add_option("--order", order, "Ordering key: a, b or c")
        ->check(CLI::IsMember({"a", "b", "c"}))
        ->capture_default_str();
    sub.add_option("--count", config.count, "Number of triples")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    sub.add_option("--classes", classes, "Comma-separated classes, e.g. A,D")
        ->capture_default_str();
    sub.add_option("--max-lag", config.max_lag, "Largest lag (default min(200, n/2))");
    sub.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub.add_option("--out", out_path, "Output file (default stdout)");
    sub.add_option("--input-file", inputs, "Integer sequence file, one value per line");
    sub.add_option("--sample", sample_mode,
                   "shared: first N by hypotenuse re-sorted by the key; key: first N by the key")
        ->check(CLI::IsMember({"shared", "key"}))
        ->capture_default_str();
}

} // namespace

std::vector<ClassLabel> parse_classes(const std::string& text)
{
    std::vector<ClassLabel> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.size() != 1 || !class_from_char(item[0])) {
            throw ValidationError("unknown class '" + item + "'");
        }
        const ClassLabel label = *class_from_char(item[0]);
        if (std::find(out.begin(), out.end(), label) != out.end()) {
            throw ValidationError("class " + item + " listed twice");
        }
        out.push_back(label);
    }
    if (out.empty()) {
        throw ValidationError("class list is empty");
    }
    return out;
}

std::vector<std::uint64_t> read_integer_file(const std::filesystem::path& path)
{
    std::ifstream file(path);
    if (!file) {
        throw IoError("cannot read " + path.string());
    }
    std::vector<std::uint64_t> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        std::uint64_t value = 0;
        std::size_t used = 0;
        try {
            if (token.front() == '-' || token.front() == '+') {
                throw std::invalid_argument("signed");
            }
            value = std::stoull(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                                  ": expected a non-negative integer, got '" + token + "'");
        }
        out.push_back(value);
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Primitive Pythagorean triple class sequences and their correlations", "pptseq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    RunConfig config;
    std::string order = "c";
    std::string classes = "A,B,C,D,E,F";
    std::string format = "csv";
    std::string sample_mode = "shared";
    std::string domain = "gaps";
    std::string out_path;
    std::vector<std::string> inputs;

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"generate", "Write the ordered triples with their classes"},
        {"gaps", "Write per-class gap sequences"},
        {"binary", "Write per-class indicator sequences"},
        {"autocorr", "Circular autocorrelation of gap or binary sequences"},
        {"crosscorr", "Circular cross-correlation of two classes' sequences"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common_options(*sub, config, order, classes, format, sample_mode, out_path, inputs);
        if (std::string_view(name) == "autocorr" || std::string_view(name) == "crosscorr") {
            sub->add_option("--domain", domain, "gaps or binary")
                ->check(CLI::IsMember({"gaps", "binary"}))
                ->capture_default_str();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        config.key = *ordering_from_string(order);
        config.classes = parse_classes(classes);
        config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        config.sample = *sample_mode_from_string(sample_mode);
        config.domain = domain == "gaps" ? Domain::Gaps : Domain::Binary;
        if (!out_path.empty()) {
            config.output_path = out_path;
        }
        config.input_files.assign(inputs.begin(), inputs.end());
    } catch (const ValidationError& e) {
        err << "pptseq: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (config.command == "gaps") {
            auto result = cmd_gaps(config, err);
            emit(config, result.text, out, argc, argv);
            return result.any_failed ? kDomain : kSuccess;
        }
        std::string text;
        if (config.command == "generate") {
            text = cmd_generate(config);
        } else if (config.command == "binary") {
            text = cmd_binary(config);
        } else if (config.command == "autocorr") {
            text = cmd_autocorr(config);
        } else {
            text = cmd_crosscorr(config);
        }
        emit(config, text, out, argc, argv);
        return kSuccess;
    } catch (const UsageError& e) {
        err << "pptseq: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "pptseq: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        // Overflow, too few occurrences, short sequences, malformed input data.
        err << "pptseq: " << e.what() << "\n";
        return kDomain;
    }
}

} // namespace pptseq::cli
