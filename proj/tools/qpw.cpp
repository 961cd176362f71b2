#include <iostream>

#include "qpw/cli.hpp"

int main(int argc, char** argv) { return qpw::cli::run(argc, argv, std::cout, std::cerr); }
