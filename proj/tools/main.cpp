#include "combquad/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return combquad::run_cli(argc, argv, std::cout, std::cerr); }
