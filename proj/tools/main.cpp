#include <iostream>

#include "lattice/cli.hpp"

int main(int argc, char** argv) {
    return lattice::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
