#include <iostream>

#include "theta/cli.hpp"

int main(int argc, char** argv) { return theta::run_cli(argc, argv, std::cout, std::cerr); }
