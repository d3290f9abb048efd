#include <iostream>

#include <linsplit/cli.hpp>

int main(int argc, char** argv) { return linsplit::run_cli(argc, argv, std::cout, std::cerr); }
