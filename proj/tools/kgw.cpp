#include <iostream>

#include "kgw/cli/run.hpp"

int main(int argc, char** argv) { return kgw::cli::main(argc, argv, std::cout, std::cerr); }
