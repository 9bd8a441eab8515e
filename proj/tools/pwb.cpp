#include <iostream>
#include <string>
#include <vector>

#include "pwb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return pwb::cli::run(args, std::cin, std::cout, std::cerr);
}
