#include "pebble_cli.hpp"

int main(int argc, char** argv) { return pebbling::cli::run_cli(argc, argv); }
