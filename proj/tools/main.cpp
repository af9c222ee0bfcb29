#include "thermgrav/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return thermgrav::cli::run(argc, argv, std::cout, std::cerr); }
