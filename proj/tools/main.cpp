#include "posetrack/cli.hpp"

int main(int argc, char** argv) { return posetrack::cli_main(argc, argv); }
