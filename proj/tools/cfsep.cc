#include <iostream>
#include <string>
#include <vector>

#include "cfsep/cli.hh"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cfsep::run_cli(args, std::cout, std::cerr);
}
