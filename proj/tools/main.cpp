#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return chopf::cli::run(argc, argv, std::cout, std::cerr);
}
