#include <iostream>
#include <string>
#include <vector>

#include "hcolor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hcolor::run_cli(args, std::cout, std::cerr);
}
