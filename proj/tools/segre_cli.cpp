#include <iostream>
#include <string>
#include <vector>

#include "segre/cli.hpp"

int main(int argc, char** argv) {
    return segre::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
