#include <iostream>
#include <string>
#include <vector>

#include "recjoint/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return recjoint::parse_and_dispatch(args, std::cout, std::cerr);
}
