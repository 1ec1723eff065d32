#include "cli.hpp"

int main(int argc, char** argv) { return ratseries::cli::run(argc, argv); }
