#include "heisospec/cli.hpp"

int main(int argc, char** argv) {
  return heisospec::cli::run_cli(argc, argv);
}
