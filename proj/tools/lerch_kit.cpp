#include <iostream>

#include "lerch_cli.hpp"

int main(int argc, char** argv) { return lerch::kit::run_cli(argc, argv, std::cout, std::cerr); }
