#include "biprabhakar/cli.hpp"

int main(int argc, char** argv) { return biprab::cli::main(argc, argv); }
