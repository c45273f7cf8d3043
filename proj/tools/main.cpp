#include "cli.hpp"

int main(int argc, char** argv) { return mdim::cli_main(argc, argv); }
