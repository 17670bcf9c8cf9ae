#include "visclimit/cli.hpp"

int main(int argc, char** argv) { return visclimit::cli::run(argc, argv); }
