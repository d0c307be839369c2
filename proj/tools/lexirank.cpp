#include <iostream>

#include "lexirank/cli.hpp"

int main(int argc, char** argv) { return lexirank::cli::run(argc, argv, std::cout, std::cerr); }
