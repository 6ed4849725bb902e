#include "orturan/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return orturan::runCli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
