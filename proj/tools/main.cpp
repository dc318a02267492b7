#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return torhyp::cli::run(argc, argv, std::cout, std::cerr); }
