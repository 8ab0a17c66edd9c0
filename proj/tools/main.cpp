#include <iostream>
#include <string>
#include <vector>

#include "graphmeasure/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    graphmeasure::CliResult result = graphmeasure::cli_run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
