#include <iostream>

#include "minann/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return minann::run_cli(args, std::cout, std::cerr);
}
