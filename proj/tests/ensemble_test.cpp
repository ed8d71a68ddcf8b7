#include <doctest.h>

TEST_SUITE("ensemble") {}
