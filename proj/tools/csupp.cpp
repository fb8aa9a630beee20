#include "csupp/cli.hpp"

int main(int argc, char** argv) { return csupp::cli::run_cli(argc, argv); }
