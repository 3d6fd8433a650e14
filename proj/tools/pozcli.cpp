#include "poz/cli.hpp"

int main(int argc, char** argv) { return poz::run_cli(argc, argv); }
