#pragma once

#include <gmpxx.h>
#include <string>

namespace latticehom {

// All linear algebra and character arithmetic is exact.  Homology over C is
// detected by ranks over Q, so floating point is never used anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Rat& q) {
    return q.get_str();
}

inline std::string to_string(const Int& z) {
    return z.get_str();
}

inline bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

}  // namespace latticehom
