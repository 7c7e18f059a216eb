#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return fdp::cli::run(argc, argv, std::cout, std::cerr); }
