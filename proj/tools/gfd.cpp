#include <iostream>

#include "gfd/cli.hpp"

int main(int argc, char** argv) { return gfd::cli::run(argc, argv, std::cout, std::cerr); }
