#include <iostream>

#include "h3mag/cli.hpp"

int main(int argc, char ** argv)
{
  return h3mag::cli::run(argc, argv, std::cout, std::cerr);
}
