#include <iostream>

#include "torikit/cli.hpp"

int main(int argc, char** argv) { return torikit::cli::main_entry(argc, argv, std::cout, std::cerr); }
