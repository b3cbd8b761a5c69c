#include <iostream>

#include "cliffq/cli.hpp"

int main(int argc, char** argv) { return cliffq::cli_main(argc, argv, std::cout, std::cerr); }
