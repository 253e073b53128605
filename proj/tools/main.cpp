#include "stablelattice/cli.hpp"

int main(int argc, char** argv) { return stablelattice::cli::run(argc, argv); }
