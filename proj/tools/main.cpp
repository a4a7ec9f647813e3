#include <iostream>

#include "eitmech/app/cli.hpp"

int main(int argc, char** argv) {
    return eitmech::app::run_cli(argc, argv, std::cout, std::cerr);
}
