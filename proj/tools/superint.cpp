#include <iostream>

#include "superint/cli/commands.hpp"

int main(int argc, char** argv) { return superint::cli::run(argc, argv, std::cout, std::cerr); }
