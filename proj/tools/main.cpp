#include <iostream>

#include "robustsub/cli.hpp"

int main(int argc, char** argv) { return robustsub::cli::run(argc, argv, std::cout, std::cerr); }
