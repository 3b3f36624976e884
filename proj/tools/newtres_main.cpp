#include "newtres/cli_app.hpp"

int main(int argc, char** argv) { return newtres::run_cli(argc, argv); }
