#include <iostream>

#include "gradus/cli.hpp"

int main(int argc, char** argv) { return gradus::cli::main(argc, argv, std::cout, std::cerr); }
