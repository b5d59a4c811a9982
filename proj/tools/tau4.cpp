#include <iostream>

#include "tau4/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tau4::cli::run(args, std::cout, std::cerr);
}
