#include <iostream>

#include "primemodes/cli.hpp"

int main(int argc, char** argv) { return primemodes::cli::run(argc, argv, std::cout, std::cerr); }
