#include <iostream>

#include "crossnum/cli.hpp"

int main(int argc, char** argv) { return crossnum::cli::run(argc, argv, std::cout, std::cerr); }
