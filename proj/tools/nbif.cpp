#include <iostream>

#include "nbif/cli.hpp"

int main(int argc, char** argv) { return nbif::cli_main(argc, argv, std::cout, std::cerr); }
