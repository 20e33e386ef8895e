#include "laas/cli.hpp"

int main(int argc, char** argv) { return laas::cli::run(argc, argv); }
