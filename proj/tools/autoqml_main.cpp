#include "autoqml/cli.hpp"

int main(int argc, char** argv) { return autoqml::cli::run_cli(argc, argv); }
