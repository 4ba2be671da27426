#include <iostream>

#include "radial/cli.hpp"

int main(int argc, char** argv) { return radial::cli::run(argc, argv, std::cout, std::cerr); }
