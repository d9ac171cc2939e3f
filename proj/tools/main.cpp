#include <bookramsey/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return bookramsey::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
