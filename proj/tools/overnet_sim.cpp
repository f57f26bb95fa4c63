#include <iostream>
#include <string>
#include <vector>

#include "overnet/experiment.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return overnet::run_cli(args, std::cout, std::cerr);
}
