#include "cli.hpp"

int main(int argc, char** argv) { return ordram::cli::run(argc, argv, std::cout, std::cerr); }
