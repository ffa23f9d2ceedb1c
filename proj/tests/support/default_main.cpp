#include "doctest.h"

// Pulled in by test binaries that do not define their own entry point.
int main(int argc, char** argv) { return doctest::Context(argc, argv).run(); }
