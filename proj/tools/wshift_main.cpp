#include "wshift/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return wshift::run_cli(argc, argv, std::cout, std::cerr);
}
