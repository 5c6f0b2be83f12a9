#include <iostream>
#include <string>
#include <vector>

#include "ffdistlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ffd::cli_main(std::move(args), std::cout, std::cerr);
}
