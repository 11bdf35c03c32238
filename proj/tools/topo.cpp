#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "topo/cli.hpp"

int main(int argc, char** argv) {
  topo::cli::Environment env;
  try {
    env.seed = topo::cli::seed_from_env(std::getenv("TOPO_SEED"));
  } catch (const topo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return topo::cli::kUsage;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return topo::cli::run(std::move(args), std::cin, std::cout, std::cerr, env);
}
