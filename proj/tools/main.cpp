#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return sb::run_cli(argc, argv, std::cout, std::cerr); }
