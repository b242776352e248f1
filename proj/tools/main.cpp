#include <iostream>

#include "blaschke_lab_cli/app.hpp"

int main(int argc, char** argv) { return blaschke_lab::cli::run_cli(argc, argv, std::cout, std::cerr); }
