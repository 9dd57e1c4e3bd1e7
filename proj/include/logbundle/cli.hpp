#pragma once

#include <string>
#include <vector>

namespace logbundle::cli {

struct Outcome {
    int exit_code = 0;  // 0 success, 1 domain error, 2 malformed input
    std::string out;    // the emitted JSON document (empty when written to --out)
    std::string err;    // diagnostics
};

// Runs one command line (without the program name).
Outcome run(const std::vector<std::string>& args);

}  // namespace logbundle::cli
