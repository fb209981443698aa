#include <iostream>

#include "tzero/cli.hpp"

int main(int argc, char** argv) { return tzero::run_cli(argc, argv, std::cout, std::cerr); }
