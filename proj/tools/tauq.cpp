#include <iostream>

#include "tauq/cli.hpp"

int main(int argc, char** argv) { return tauq::cli::run(argc, argv, std::cout, std::cerr); }
