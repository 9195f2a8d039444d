#include "blmab/cli.hpp"

int main(int argc, char** argv) { return blmab::cli_main(argc, argv); }
