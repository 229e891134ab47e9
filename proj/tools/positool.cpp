#include <iostream>
#include <string>
#include <vector>

#include "posit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return posit::cli::run(args, std::cout, std::cerr);
}
