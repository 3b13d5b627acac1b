#include "hopfcyc/cli.hpp"

int main(int argc, char** argv) { return hopfcyc::cli::run(argc, argv); }
