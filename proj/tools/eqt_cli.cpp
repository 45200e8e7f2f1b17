#include <iostream>

#include "eqt/cli.hpp"

int main(int argc, char** argv)
{
    return eqt::run_cli(argc, argv, std::cout, std::cerr);
}
