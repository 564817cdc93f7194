#include "kbb/cli.hpp"

int main(int argc, char** argv) { return kbb::cli::run(argc, argv); }
