#include <iostream>
#include <string>
#include <vector>

#include "recgrow/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return recgrow::cli::run(args, std::cout, std::cerr);
}
