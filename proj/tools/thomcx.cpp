#include <iostream>

#include "thomcx/cli.hpp"

int main(int argc, char** argv) { return thomcx::cli::run(argc, argv, std::cout, std::cerr); }
