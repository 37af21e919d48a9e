// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "scatter/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_config;
  if (const char* env = std::getenv("SCATTER_CONFIG")) env_config = env;
  return scatter::cli::run_cli(std::move(args), std::cout, std::cerr, env_config);
}
