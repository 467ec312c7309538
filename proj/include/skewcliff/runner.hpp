#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcliff/manifest.hpp"

namespace skewcliff {

inline constexpr const char* kToolName = "skewcliff";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct RunOverrides {
    std::optional<int> max_degree;
    std::optional<std::uint64_t> seed;
    std::vector<std::int64_t> primes; // nonempty replaces the manifest choice
    bool timings = false;          // wall-clock per command, stderr only
};

struct RunResult {
    std::string report;  // JSON text, trailing newline
    int exit_code = 0;   // 0 done, 2 input error, 3 consistency alarm
};

// Executes the manifest's commands in canonical order and renders the report.
// raw_text is hashed into the report header.
RunResult run_manifest(const Manifest& m, const std::string& raw_text, const RunOverrides& o);

// parse + run; parse failures yield an error report with exit code 2
RunResult run_manifest_text(const std::string& text, const RunOverrides& o);

std::uint64_t fnv1a64(const std::string& data);

} // namespace skewcliff
