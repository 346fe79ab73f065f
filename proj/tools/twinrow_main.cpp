#include "twinrow/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return twinrow::cli_main(argc, argv, std::cout, std::cerr); }
