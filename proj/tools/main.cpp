#include "cli_core.hpp"

int main(int argc, char** argv) { return guinand::cli::run(argc, argv); }
