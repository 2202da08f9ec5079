#include <iostream>

#include "qfgl/cli/commands.hpp"

int main(int argc, char** argv) { return qfgl::cli::main_entry(argc, argv, std::cout, std::cerr); }
