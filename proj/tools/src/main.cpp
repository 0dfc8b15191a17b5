#include "excess_tools/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return excess::tools::run(argc, argv, std::cout, std::cerr); }
