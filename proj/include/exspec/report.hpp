#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "exspec/moments.hpp"
#include "exspec/polynomial.hpp"

namespace exspec::io {

using ordered_json = nlohmann::ordered_json;

enum class Command { Analyze, MinPoly, Factor, Gap, Bounds, Count, Rates, Classify, Compare };

std::optional<Command> command_from_name(const std::string& name);
std::string command_name(Command c);

struct Options {
    Rational tol = Rational(Int(1), Int(1000000));
    int max_iter = 0; // 0 = derive from the worst-case estimate
    int trace_cap = 100;
};

// One spectral input normalized to a characteristic polynomial plus its
// power sums.  All rationals cross this boundary as exact strings.
struct SpectralInput {
    Polynomial cp;
    MomentSeq moments;
    long n = 0;
};

struct ParsedRequest {
    Command command;
    std::optional<SpectralInput> input;        // all commands except rates/compare
    std::optional<SpectralInput> second;       // compare only
    std::optional<std::pair<Rational, Rational>> interval; // count only
    // rates only:
    int rates_m = 0;
    Rational rates_delta;
    int rates_steps = 0;
    std::vector<std::string> warnings;
};

struct CommandResult {
    ordered_json report;
    int exit_code = 0;
};

ParsedRequest parse_request(Command command, const ordered_json& document);

CommandResult run_command(const ParsedRequest& request, const Options& options);

// Error payload for the diagnostic stream.
ordered_json error_report(const std::string& name, const std::string& message);

// Flat deterministic text rendering of a report.
std::string render_text(const ordered_json& report);

} // namespace exspec::io
