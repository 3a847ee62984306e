#include <iostream>

#include <spindle/cli.hpp>

int main(int argc, char** argv) { return spindle::cli_main(argc, argv, std::cout, std::cerr); }
