#include "sturmian/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const sturmian::Outcome o = sturmian::run_cli(args, std::cin);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}
