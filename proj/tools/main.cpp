#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return curvpool::cli::run(argc, argv, std::cout, std::cerr); }
