#pragma once

#include <gmpxx.h>

#include <string>

namespace zalpha {

using Int = mpz_class;
using Rat = mpq_class;

/// Floor of the integer square root.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Smallest integer >= sqrt(n), n >= 0.
inline Int ceil_sqrt(const Int& n) {
    Int r = isqrt(n);
    if (r * r < n) r += 1;
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int abs_int(const Int& a) { return a >= 0 ? a : Int(-a); }

/// Floor of p/q for q != 0.
inline Int fdiv(const Int& p, const Int& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return r;
}

/// Floor of a rational number.
inline Int rat_floor(const Rat& x) {
    return fdiv(x.get_num(), x.get_den());
}

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace zalpha
