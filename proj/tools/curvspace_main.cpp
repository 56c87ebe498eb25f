#include <iostream>
#include <string>
#include <vector>

#include "curvspace/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return curvspace::cli::dispatch(std::move(args), std::cout, std::cerr);
}
