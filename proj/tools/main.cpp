#include "adskit/cli.hpp"

int main(int argc, char** argv) { return adskit::cli::run_main(argc, argv); }
