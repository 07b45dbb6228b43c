#include <iostream>

#include "wgmcool/cli.hpp"

int main(int argc, char** argv) { return wgmcool::cli::run(argc, argv, std::cout, std::cerr); }
