#include <iostream>

#include "starrad/cli.hpp"

int main(int argc, char** argv) { return starrad::cli::run(argc, argv, std::cout, std::cerr); }
