#include <iostream>

#include "doublejc/cli.hpp"

int main(int argc, char** argv) { return doublejc::cli::run(argc, argv, std::cout, std::cerr); }
