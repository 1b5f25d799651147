#include "cli.hpp"

int main(int argc, char** argv) { return evenzeta::cli::run(argc, argv); }
