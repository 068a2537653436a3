#include <iostream>

#include "empo/cli.hpp"

int main(int argc, char** argv) {
    return empo::cli::run_cli(argc, argv, std::cout, std::cerr);
}
