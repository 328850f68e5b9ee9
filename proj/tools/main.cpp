#include "dualfield/cli.hpp"

int main(int argc, char** argv) { return dualfield::cli::run(argc, argv); }
