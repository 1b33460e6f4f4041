#include "cli.hpp"

int main(int argc, char** argv) {
  return commgraph::cli::run(argc, argv);
}
