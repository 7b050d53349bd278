#include <iostream>

#include "lsc/cli.hpp"

int main(int argc, char** argv) {
    return lsc::run_cli(argc, argv, std::cout, std::cerr);
}
