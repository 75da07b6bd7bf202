#include "qfbend/lab.hpp"

int main(int argc, char** argv) { return qfb::lab::cli_main(argc, argv); }
