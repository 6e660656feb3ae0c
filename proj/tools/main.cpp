#include <iostream>

#include "nichols/cli.hpp"

int main(int argc, char** argv) { return nichols::cli::run(argc, argv, std::cout, std::cerr); }
