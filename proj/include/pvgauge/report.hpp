#pragma once

#include "pvgauge/parse.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pvg {

namespace exit_code {
inline constexpr int ok = 0; ///< witness produced, or construction succeeded
inline constexpr int none_found = 1;
inline constexpr int inconclusive = 2;
inline constexpr int needs_bound = 3;
inline constexpr int input_error = 4;
inline constexpr int math_error = 5;
inline constexpr int usage = 64;
} // namespace exit_code

const std::vector<std::string>& command_names();

struct RunOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    std::optional<DegreeBounds> bounds;
};

struct Report {
    nlohmann::ordered_json json;
    int exit_code = exit_code::ok;

    std::string to_json() const;
    std::string to_text() const;
};

/// Never throws for library errors; they become reports with result "error".
Report run_command(const std::string& cmd, const InputDocument& doc, const RunOptions& opts = {});

/// Report for an input that could not be read or parsed.
Report error_report(const std::string& cmd, const Error& e);

} // namespace pvg
