#include <iostream>

#include "msq/cli.hpp"

int main(int argc, char** argv) { return msq::run(argc, argv, std::cout, std::cerr); }
