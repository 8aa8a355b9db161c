#include <iostream>
#include <string>
#include <vector>

#include "fuzzyreg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fuzzyreg::cli::run(args, std::cout, std::cerr);
}
