#include "cli.hpp"

int main(int argc, char** argv) { return szegedy::cli::run(argc, argv); }
