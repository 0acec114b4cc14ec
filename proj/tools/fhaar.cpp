#include <iostream>

#include "fhaar/cli.hpp"

int main(int argc, char** argv) { return fhaar::run_cli(argc, argv, std::cout, std::cerr); }
