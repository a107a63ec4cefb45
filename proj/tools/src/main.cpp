#include <iostream>

#include "htube/cli/app.hpp"

int main(int argc, char** argv) { return htube::cli::run(argc, argv, std::cout, std::cerr); }
