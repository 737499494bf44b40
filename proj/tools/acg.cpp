#include <iostream>

#include "acg/cli.hpp"

int main(int argc, char** argv) { return acg::cli::run(argc, argv, std::cout, std::cerr); }
