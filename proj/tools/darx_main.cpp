#include <iostream>
#include <string>
#include <vector>

#include "darx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return darx::run_cli(args, std::cout, std::cerr);
}
