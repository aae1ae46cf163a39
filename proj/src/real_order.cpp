#include <cmath>

#include "zalpha/field.hpp"

namespace zalpha {

namespace {

struct RI {
    Rat lo, hi;
};

RI ri_mul(const RI& x, const RI& y) {
    Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    d.canonicalize();
    RI r{a, a};
    for (const Rat* t : {&b, &c, &d}) {
        if (*t < r.lo) r.lo = *t;
        if (*t > r.hi) r.hi = *t;
    }
    return r;
}

/// Interval extension of a polynomial over x in [X.lo, X.hi] (Horner).
RI eval_interval(const std::vector<Int>& coeffs, const RI& x) {
    RI r{Rat(0), Rat(0)};
    for (size_t i = coeffs.size(); i-- > 0;) {
        r = ri_mul(r, x);
        Rat c(coeffs[i]);
        r.lo += c;
        r.hi += c;
    }
    return r;
}

Rat eval_point(const std::vector<Int>& coeffs, const Rat& x) {
    Rat r(0);
    for (size_t i = coeffs.size(); i-- > 0;) {
        r = r * x + Rat(coeffs[i]);
        r.canonicalize();
    }
    return r;
}

constexpr long kStartDenomBits = 6;

}  // namespace

Int Field::sign_ceiling(const Elem& a) const {
    // d* = (m-1)(1 + opc(a)^m P S^2), Eq. (25)
    Int d = Int(m_ - 1) *
            (1 + pow_int(opc(a), static_cast<unsigned long>(m_)) * const_P_ * const_S_ * const_S_);
    return d < 1 ? Int(1) : d;
}

Int Field::round_ceiling(const Elem& a, const Int& s) const {
    // d* = (m-1)(1 + opc(a,s)^m P S^(m+1)), Eq. (28)
    Int c = opc(a);
    if (abs_int(s) > c) c = abs_int(s);
    Int d = Int(m_ - 1) * (1 + pow_int(c, static_cast<unsigned long>(m_)) * const_P_ *
                                   pow_int(const_S_, static_cast<unsigned long>(m_) + 1));
    return d < 1 ? Int(1) : d;
}

std::pair<Rat, Rat> Field::enclose(const Elem& a, const Int& d) const {
    check(a);
    auto [lo, hi] = refined_interval(d);
    if (lo == hi) {
        Rat v = eval_point(a.c, lo);
        return {v, v};
    }
    RI r = eval_interval(a.c, RI{lo, hi});
    return {r.lo, r.hi};
}

int Field::sign(const Elem& a, RefinePolicy policy) const {
    check(a);
    if (is_rational_integer(a)) return sgn(a.c[0]);

    const Int cap = sign_ceiling(a);
    Int d = (policy == RefinePolicy::DirectCeiling) ? cap : Int(1) << kStartDenomBits;
    if (d > cap) d = cap;
    while (true) {
        auto [lo, hi] = refined_interval(d);
        if (lo == hi) return sgn(eval_point(a.c, lo));  // rational alpha: exact value
        if (d >= cap) {
            // Within 1/d* of alpha the sign of g cannot flip (Eq. 25), so a
            // single exact point evaluation decides.
            return sgn(eval_point(a.c, lo));
        }
        RI r = eval_interval(a.c, RI{lo, hi});
        if (sgn(r.lo) > 0) return 1;
        if (sgn(r.hi) < 0) return -1;
        d <<= 1;
        if (d > cap) d = cap;
    }
}

int Field::cmp(const Elem& a, const Elem& b, RefinePolicy policy) const {
    return sign(sub(a, b), policy);
}

Int Field::floor_div_int(const Elem& a, const Int& s, RefinePolicy policy) const {
    check(a);
    if (s == 0) throw DivisionByZero();
    if (s < 0) return floor_div_int(neg(a), Int(-s), policy);

    if (is_rational_integer(a)) return fdiv(a.c[0], s);

    const Int cap = round_ceiling(a, s);
    Int d = (policy == RefinePolicy::DirectCeiling) ? cap : Int(1) << kStartDenomBits;
    if (d > cap) d = cap;
    const Rat rs{s};
    while (true) {
        auto [lo, hi] = refined_interval(d);
        if (lo == hi) {
            Rat v = eval_point(a.c, lo) / rs;
            v.canonicalize();
            return rat_floor(v);
        }
        if (d >= cap) {
            // a/s is not an integer here (that needs a rational), so by
            // Eq. (28) the point value g(lo)/s lies strictly between
            // floor(a/s) and ceil(a/s); its floor is the answer.
            Rat v = eval_point(a.c, lo) / rs;
            v.canonicalize();
            return rat_floor(v);
        }
        RI r = eval_interval(a.c, RI{lo, hi});
        Rat qlo = r.lo / rs, qhi = r.hi / rs;
        qlo.canonicalize();
        qhi.canonicalize();
        Int flo = rat_floor(qlo), fhi = rat_floor(qhi);
        if (flo == fhi) return flo;
        d <<= 1;
        if (d > cap) d = cap;
    }
}

Int Field::ceil_div_int(const Elem& a, const Int& s, RefinePolicy policy) const {
    if (s == 0) throw DivisionByZero();
    if (s < 0) return ceil_div_int(neg(a), Int(-s), policy);
    return -floor_div_int(neg(a), s, policy);
}

Int Field::round_div_int(const Elem& a, const Int& s, RefinePolicy policy) const {
    check(a);
    if (s == 0) throw DivisionByZero();
    if (s < 0) return round_div_int(neg(a), Int(-s), policy);
    // round-half-up: floor(a/s + 1/2) = floor((2a + s) / (2s))
    Elem t = scalar_mul(2, a);
    t.c[0] += s;
    return floor_div_int(t, Int(2 * s), policy);
}

Int Field::floor_div(const Elem& a, const Elem& b, RefinePolicy policy) const {
    check(a);
    check(b);
    if (is_zero(b)) throw DivisionByZero();
    if (is_rational_integer(b)) return floor_div_int(a, b.c[0], policy);
    InverseRep inv = inverse(b);  // den > 0 by normalization
    return floor_div_int(mul(a, inv.num), inv.den, policy);
}

Int Field::ceil_div(const Elem& a, const Elem& b, RefinePolicy policy) const {
    check(a);
    check(b);
    if (is_zero(b)) throw DivisionByZero();
    if (is_rational_integer(b)) return ceil_div_int(a, b.c[0], policy);
    InverseRep inv = inverse(b);
    return ceil_div_int(mul(a, inv.num), inv.den, policy);
}

Int Field::round_div(const Elem& a, const Elem& b, RefinePolicy policy) const {
    check(a);
    check(b);
    if (is_zero(b)) throw DivisionByZero();
    if (is_rational_integer(b)) return round_div_int(a, b.c[0], policy);
    InverseRep inv = inverse(b);
    return round_div_int(mul(a, inv.num), inv.den, policy);
}

double Field::approx_log2_abs(const Elem& a) const {
    check(a);
    if (is_zero(a)) return -HUGE_VAL;
    if (is_rational_integer(a)) {
        long exp;
        double man = mpz_get_d_2exp(&exp, a.c[0].get_mpz_t());
        return std::log2(std::fabs(man)) + static_cast<double>(exp);
    }
    auto [lo, hi] = refined_interval(Int(1) << 64);
    Rat mid = (lo == hi) ? lo : Rat((lo + hi) / 2);
    mid.canonicalize();
    Rat v = eval_point(a.c, mid);
    if (v == 0) return -HUGE_VAL;
    long ep, eq;
    double mp = mpz_get_d_2exp(&ep, v.get_num().get_mpz_t());
    double mq = mpz_get_d_2exp(&eq, v.get_den().get_mpz_t());
    return std::log2(std::fabs(mp)) - std::log2(std::fabs(mq)) +
           static_cast<double>(ep - eq);
}

}  // namespace zalpha
