#include <iostream>

#include "cubicforge/cli.hpp"

int main(int argc, char** argv) { return cubicforge::cli::run(argc, argv, std::cout, std::cerr); }
