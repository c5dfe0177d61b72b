// SPDX-License-Identifier: Apache-2.0
// doctest driver for the unit suite.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
