#include <iostream>

#include "polyk/cli/commands.hpp"

int main(int argc, char** argv) { return polyk::cli::main_entry(argc, argv, std::cout, std::cerr); }
