#include <iostream>

#include "rectconst/cli.hpp"

int main(int argc, char** argv) { return rectconst::run_cli(argc, argv, std::cout, std::cerr); }
