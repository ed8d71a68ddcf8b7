#include <doctest.h>

TEST_SUITE("sdp") {}
