#include <iostream>

#include "nefres/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nefres::run(args, std::cout, std::cerr);
}
