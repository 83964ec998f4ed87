#include <iostream>
#include <vector>

#include "jct/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jct::run(args, std::cout, std::cerr);
}
