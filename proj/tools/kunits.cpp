#include <iostream>

#include "kunits/commands.hpp"

int main(int argc, char** argv)
{
    return kunits::cli::run(argc, argv, std::cout, std::cerr);
}
