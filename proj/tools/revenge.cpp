#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return revenge::cli::run(std::move(args), std::cin, std::cout, std::cerr);
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return revenge::cli::exit_verify_failed;
  }
}
