#include <iostream>
#include <string>
#include <vector>

#include "orelim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orelim::run_cli(args, std::cout, std::cerr);
}
