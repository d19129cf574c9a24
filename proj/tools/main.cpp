#include "gorstab/cli.hpp"

int main(int argc, char** argv) { return gorstab::cli::run(argc, argv); }
