#include "fiplab/cli.hpp"

int main(int argc, char** argv) { return fiplab::cli::run(argc, argv); }
