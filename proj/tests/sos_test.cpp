#include <doctest.h>

TEST_SUITE("sos") {}
