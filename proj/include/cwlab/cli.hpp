#pragma once

#include <string>
#include <vector>

namespace cwlab {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 a FAIL item or an OPEN verdict, 2 usage or input errors.
CliResult run(const std::vector<std::string> & args);

} // namespace cwlab
