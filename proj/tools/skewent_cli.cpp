#include <iostream>

#include "skewent/cli.hpp"

int main(int argc, char** argv) { return skewent::run_cli(argc, argv, std::cout, std::cerr); }
