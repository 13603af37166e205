#include <iostream>
#include <string>
#include <vector>

#include "pib/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pib::cli_dispatch(args, std::cout, std::cerr);
}
