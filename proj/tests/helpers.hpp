#pragma once

// Shared fixture fields for the unit tests.

#include "zalpha/field.hpp"

namespace zt {

using namespace zalpha;

// Q(sqrt 2): f = x^2 - 2, alpha in [1, 2]
inline const Field& sqrt2() {
    static Field f({Int(-2), Int(0)}, Rat(1), Rat(2));
    return f;
}

// f = x^3 - x - 1, the plastic number ~1.3247
inline const Field& plastic() {
    static Field f({Int(-1), Int(-1), Int(0)}, Rat(1), Rat(2));
    return f;
}

// f = x^3 - 2
inline const Field& cbrt2() {
    static Field f({Int(-2), Int(0), Int(0)}, Rat(1), Rat(2));
    return f;
}

// f = x^5 - x - 1, real root ~1.1673
inline const Field& deg5() {
    static Field f({Int(-1), Int(-1), Int(0), Int(0), Int(0)}, Rat(1), Rat(2));
    return f;
}

// m = 1: f = x - 5 (alpha = 5; elements are plain integers)
inline const Field& linear() {
    static Field f({Int(-5)}, Rat(4), Rat(6));
    return f;
}

inline Elem E(const Field& f, std::vector<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return f.elem(std::move(v));
}

}  // namespace zt
