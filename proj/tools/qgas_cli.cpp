#include "qgas/cli.hpp"

int main(int argc, char** argv) { return qgas::cli::run(argc, argv); }
