#include <iostream>

#include "bmparity/cli.hpp"

int main(int argc, char** argv) { return bmparity::run_cli(argc, argv, std::cout, std::cerr); }
