#include "transvect/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return transvect::cli::run(argc, argv, std::cout, std::cerr); }
