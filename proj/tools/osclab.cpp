#include <iostream>

#include "osclab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return osclab::run_cli(args, std::cout, std::cerr);
}
