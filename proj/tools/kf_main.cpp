#include <iostream>

#include "kf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return kf::run_cli(args, std::cout, std::cerr);
}
