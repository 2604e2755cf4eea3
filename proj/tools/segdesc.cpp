#include "segdesc/cli/cli.hpp"

int main(int argc, char** argv) { return segdesc::cli::main(argc, argv); }
