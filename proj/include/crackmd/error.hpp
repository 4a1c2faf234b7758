#pragma once

#include <stdexcept>
#include <string>

namespace crackmd {

// Error categories map 1:1 onto CLI exit codes (see tools/crackmd_main.cpp):
// ConfigError -> 1, IoError -> 2, NumericalError -> 3.

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure in a text input (config file, setfl table, dump, CSV).
// Carries a 1-based line number when one is known; 0 means "unknown".
struct ParseError : ConfigError {
    ParseError(const std::string& msg, long line_no = 0)
        : ConfigError(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
    long line;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values, out-of-range table lookups, integration blowup.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Analysis could not produce a result on this frame (e.g. no slip band,
// notch surface not found). Callers often report these as a status rather
// than aborting.
struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace crackmd
