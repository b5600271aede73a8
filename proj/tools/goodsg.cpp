#include <iostream>

#include "goodsg_cli.hpp"

int main(int argc, char** argv) { return goodsg::cli::run(argc, argv, std::cout, std::cerr); }
