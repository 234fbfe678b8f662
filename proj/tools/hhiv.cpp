#include <iostream>
#include <string>
#include <vector>

#include "hhiv/cli/app.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv, argv + argc);
    return hhiv::cli::run(args, std::cin, std::cout, std::cerr);
}
