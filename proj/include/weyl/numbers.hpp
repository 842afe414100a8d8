#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace weyl {

// Exact arithmetic everywhere; no floating point in this project.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace weyl
