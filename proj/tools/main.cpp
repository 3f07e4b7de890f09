#include <iostream>

#include "trumpkit/cli.hpp"

int main(int argc, char** argv) { return trumpkit::cli::run(argc, argv, std::cout, std::cerr); }
