#include "cli.hpp"

int main(int argc, char** argv) { return roadperc::cli::run(argc, argv); }
