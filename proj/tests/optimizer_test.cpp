#include <doctest.h>

TEST_SUITE("optimizer") {}
