#include <iostream>
#include <vector>

#include "nilcoh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nilcoh::run_cli(args, std::cin, std::cout, std::cerr);
}
