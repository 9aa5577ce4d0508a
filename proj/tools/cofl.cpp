#include "cofl/cli.hpp"

int main(int argc, char** argv) { return cofl::cli::run(argc, argv); }
