#include "canonlat/cli.hpp"

int main(int argc, char** argv) { return canonlat::cli::run(argc, argv); }
