#include <iostream>

#include "higher_jones/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hj::run_cli(args, std::cout, std::cerr);
}
