#include "dgla/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    dgla::CliResult res = dgla::run_cli(args);
    std::cout << res.output;
    return res.exit_code;
}
