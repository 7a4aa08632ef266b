#include <iostream>
#include <vector>

#include "brg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return brg::cli::run(args, std::cout, std::cerr);
}
