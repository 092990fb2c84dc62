#pragma once

#include <gmpxx.h>

#include <string>

namespace parklot {

/// Unbounded nonnegative integer used for every cardinality and formula value.
using Count = mpz_class;

inline std::string to_string(const Count& c) { return c.get_str(); }

}  // namespace parklot
