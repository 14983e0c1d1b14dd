#include <iostream>
#include <string>
#include <vector>

#include "swarmpath/scenario_io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return swarmpath::cli(args, std::cout, std::cerr);
}
