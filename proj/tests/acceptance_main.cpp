#include <iostream>

#include "jct/cli.hpp"

int main() { return jct::run_acceptance(std::cout) == 0 ? 0 : 1; }
