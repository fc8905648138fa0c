#include <iostream>

#include "metaracah/cli.hpp"

int main(int argc, char** argv) { return metaracah::run_cli(argc, argv, std::cout, std::cerr); }
