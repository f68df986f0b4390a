#include <iostream>
#include <vector>

#include "qcf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qcf::run_cli(args, std::cout, std::cerr);
}
