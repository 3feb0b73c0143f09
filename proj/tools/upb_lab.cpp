#include "upb/cli.hpp"

int main(int argc, char** argv) { return upb::run_cli(argc, argv); }
