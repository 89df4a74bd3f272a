#include <iostream>

#include "scflab/cli/commands.hpp"

int main(int argc, char** argv) { return scf::cli::run_cli(argc, argv, std::cout, std::cerr); }
