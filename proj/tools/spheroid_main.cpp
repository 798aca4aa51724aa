#include "spheroid/cli.hpp"

int main(int argc, char** argv) { return spheroid::cli::run_main(argc, argv); }
