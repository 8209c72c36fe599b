#include "textmetrics/cli.hpp"

int main(int argc, char** argv) { return textmetrics::cli_main(argc, argv); }
