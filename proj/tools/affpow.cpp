#include <affpow/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return affpow::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
