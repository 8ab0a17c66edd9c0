#pragma once

#include <string>
#include <vector>

namespace graphmeasure {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one CLI command. Exit codes: 0 success, 1 domain errors,
/// 2 parse errors (command line, graph file, expression, word literals).
/// Output is deterministic for fixed inputs.
CliResult cli_run(const std::vector<std::string>& args);

}  // namespace graphmeasure
