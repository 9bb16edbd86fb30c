#include <iostream>

#include "z4seq/cli.hpp"

int main(int argc, char** argv) { return z4seq::run_cli(argc, argv, std::cout, std::cerr); }
