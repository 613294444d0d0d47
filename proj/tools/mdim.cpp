#include <iostream>

#include "mdim_cli.hpp"

int main(int argc, char** argv) { return mdim::cli::run(argc, argv, std::cout, std::cerr); }
