#include <iostream>

#include "eigpert/cli.hpp"

int main(int argc, char** argv) { return eigpert::run_cli(argc, argv, std::cout, std::cerr); }
