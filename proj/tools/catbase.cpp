#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "catbase/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  auto result = catbase::cli::run(args, [] {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  });
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
