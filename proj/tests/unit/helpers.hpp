#pragma once

#include <doctest.h>

#include "ascent/error.hpp"

// Expect expr to throw ascent::Error of the given kind.
#define CHECK_ERROR_KIND(expr, expected)                                    \
    do {                                                                    \
        bool thrown_ = false;                                               \
        try {                                                               \
            (void)(expr);                                                   \
        } catch (const ascent::Error& e_) {                                 \
            thrown_ = true;                                                 \
            CHECK_MESSAGE(e_.kind() == (expected), e_.what());              \
        }                                                                   \
        CHECK_MESSAGE(thrown_, "no error from " #expr);                     \
    } while (0)
