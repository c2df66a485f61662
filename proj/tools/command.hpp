#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coqla::cli {

enum class Mode { exact, floating };

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,
    kMathError = 1,   // Singular / NotHermitian
    kInputError = 2,  // ParseError, unreadable file
    kShapeError = 3,  // dimension, index or size-cap violation
};

struct Command {
    std::string verb;
    std::vector<std::string> inputs;
    Mode mode = Mode::exact;
    std::size_t row = 1;
    std::size_t col = 1;
    std::size_t maxN = 9;
    double tol = 1e-9;
    bool verbose = false;
    bool verify = false;
    std::uint64_t seed = 0;
    std::string route = "col";  // solve-axb: "row" or "col"
    std::string side = "left";  // inv: "left" or "right" cofactors
};

/// Input file count each verb requires, or 0 for an unknown verb.
std::size_t requiredInputs(const std::string& verb);

/// Runs one command, writing results to `out` and diagnostics to `err`.
int runCommand(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace coqla::cli
