#include <iostream>

#include "bdcoh/report.hpp"

int main(int argc, char** argv) { return bdcoh::cli_main(argc, argv, std::cout, std::cerr); }
