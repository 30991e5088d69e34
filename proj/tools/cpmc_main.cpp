#include "cpmc/cli_app.hpp"

int main(int argc, char** argv) { return cpmc::cli_main(argc, argv); }
