#include "jacmult/cli.hpp"

int main(int argc, char** argv) { return jacmult::cli::main(argc, argv); }
