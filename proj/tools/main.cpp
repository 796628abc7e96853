#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return words123::cli::run(argc, argv, std::cout, std::cerr); }
