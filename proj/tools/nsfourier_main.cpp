#include <iostream>

#include "nsfourier/harness.hpp"

int main(int argc, char** argv) { return nsfourier::harness::main(argc, argv, std::cout, std::cerr); }
