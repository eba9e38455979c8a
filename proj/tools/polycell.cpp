#include "polycell/cli.hpp"

int main(int argc, char** argv) { return polycell::run_cli(argc, argv); }
