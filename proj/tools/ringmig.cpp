#include <iostream>

#include "ringmig/cli.hpp"

int main(int argc, char** argv) {
    return ringmig::cli::run(argc, argv, std::cout, std::cerr);
}
