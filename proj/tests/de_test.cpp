#include <doctest.h>

TEST_SUITE("de") {}
