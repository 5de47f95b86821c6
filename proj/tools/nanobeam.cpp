#include "nanobeam/cli.hpp"

int main(int argc, char** argv) { return nanobeam::cli_main(argc, argv); }
