#include <iostream>

#include "ttskit/workbench/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ttskit::cli::run(args, std::cout, std::cerr);
}
