#include <iostream>

#include "foliate/cli.hpp"

int main(int argc, char** argv) { return foliate::cli::run(argc, argv, std::cout, std::cerr); }
