#include <iostream>

#include "qset/cli.hpp"

int main(int argc, char** argv) { return qset::cli::run(argc, argv, std::cout, std::cerr); }
