#include "mstd/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mstd::cli_dispatch(argc, argv, std::cout, std::cerr); }
