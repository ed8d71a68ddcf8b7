#include <doctest.h>

TEST_SUITE("parse_json") {}
