#include "hirz/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return hirz::run_cli(argc, argv, std::cout, std::cerr);
}
