#include <iostream>

#include "dspec_cli/cli.hpp"

int main(int argc, char** argv) { return dspec::cli::run(argc, argv, std::cout, std::cerr); }
