#include <iostream>

#include "pyrolace/cli.hpp"

int main(int argc, char** argv) { return pyrolace::cli::main(argc, argv, std::cout, std::cerr); }
