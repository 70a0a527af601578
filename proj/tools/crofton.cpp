#include <iostream>

#include "crofton/cli.hpp"

int main(int argc, char** argv) { return crofton::run(argc, argv, std::cout, std::cerr); }
