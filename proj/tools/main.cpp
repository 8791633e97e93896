#include "cli.hpp"

int main(int argc, char** argv) { return permsieve::cli::run(argc, argv); }
