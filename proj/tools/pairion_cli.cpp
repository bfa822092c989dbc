#include <iostream>

#include "pairion/cli.hpp"

int main(int argc, char** argv) { return pairion::cli::run(argc, argv, std::cout, std::cerr); }
