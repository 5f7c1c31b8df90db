#include <iostream>

#include "wqsym/cli.hpp"

int main(int argc, char** argv) { return wqsym::cli::run(argc, argv, std::cout, std::cerr); }
