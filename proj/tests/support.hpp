#pragma once

#include <gtest/gtest.h>

#include "f1q/error.hpp"

#define EXPECT_CODE(stmt, expected)                                          \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << "no error thrown, expected " << f1q::to_string(expected); \
    } catch (const f1q::Error& e_) {                                         \
      EXPECT_EQ(e_.code(), expected) << e_.what();                           \
    }                                                                        \
  } while (0)
