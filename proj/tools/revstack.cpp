#include <iostream>

#include "revstack/cli.hpp"

int main(int argc, char **argv)
{
  return revstack::cli::run(argc, argv, std::cout, std::cerr);
}
