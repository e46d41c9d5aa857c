#include <iostream>
#include <string>
#include <vector>

#include "wheelset/cli.hpp"

int main(int argc, char** argv) {
  return wheelset::run(std::vector<std::string>(argv + 1, argv + argc),
                       std::cout, std::cerr);
}
