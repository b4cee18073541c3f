#include "cli.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string stdin_text;
  bool wants_stdin = false;
  for (const auto& a : args)
    if (a == "-") wants_stdin = true;
  if (wants_stdin) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    stdin_text = ss.str();
  }
  return kforest::cli::run(args, stdin_text, std::cout, std::cerr);
}
