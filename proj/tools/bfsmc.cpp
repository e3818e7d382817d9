#include <iostream>
#include <string>
#include <vector>

#include "bfsmc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bfsmc::run_cli(args, std::cout, std::cerr);
}
