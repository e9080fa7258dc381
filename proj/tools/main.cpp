#include "kcomp/cli.hpp"

int main(int argc, char** argv) { return kcomp::cli::run(argc, argv); }
