#include "anick/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return anick::run_cli(argc, argv, std::cout, std::cerr);
}
