#pragma once

// Dense univariate polynomial helpers over Z and Q, ascending coefficient
// order.  Degrees here are tiny (bounded by the field degree or small
// Sylvester matrices), so everything is schoolbook.

#include <vector>

#include "zalpha/errors.hpp"
#include "zalpha/numbers.hpp"

namespace zalpha {

using Poly = std::vector<Int>;    // ascending, possibly with trailing zeros
using QPoly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
    return d;
}

inline bool poly_is_zero(const Poly& p) { return poly_deg(p) < 0; }

inline const Int& poly_lc(const Poly& p) {
    return p[static_cast<size_t>(poly_deg(p))];
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

inline Poly poly_neg(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline Poly poly_scale(const Int& s, Poly a) {
    for (auto& c : a) c *= s;
    poly_trim(a);
    return a;
}

/// Exact quotient a / b in Z[x]; throws InexactDivision if b does not
/// divide a (or the division leaves integer remainders).
inline Poly poly_divexact(Poly a, const Poly& b) {
    poly_trim(a);
    int db = poly_deg(b);
    if (db < 0) throw DivisionByZero();
    if (poly_is_zero(a)) return {};
    int da = poly_deg(a);
    if (da < db) throw InexactDivision();
    const Int& lb = poly_lc(b);
    Poly q(static_cast<size_t>(da - db) + 1, Int(0));
    for (int i = da - db; i >= 0; --i) {
        Int& head = a[static_cast<size_t>(i + db)];
        if (head == 0) continue;
        Int c;
        Int rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), head.get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) throw InexactDivision();
        q[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(i + j)] -= c * b[static_cast<size_t>(j)];
    }
    if (!poly_is_zero(a)) throw InexactDivision();
    poly_trim(q);
    return q;
}

/// Divide every coefficient by the integer s, exactly.
inline Poly poly_divexact_int(Poly a, const Int& s) {
    if (s == 0) throw DivisionByZero();
    for (auto& c : a) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
        if (rem != 0) throw InexactDivision();
        c = q;
    }
    return a;
}

/// Pseudo-remainder and pseudo-quotient: lc(b)^(da-db+1) * a = q*b + r.
struct PseudoDivision {
    Poly quo;
    Poly rem;
};

inline PseudoDivision poly_pseudo_divide(Poly a, const Poly& b) {
    poly_trim(a);
    int db = poly_deg(b);
    if (db < 0) throw DivisionByZero();
    int da = poly_deg(a);
    if (da < db) {
        // lc(b)^0 * a = 0*b + a by convention when nothing to do; callers
        // in the PRS never hit this with da < db.
        return {{}, a};
    }
    const Int& lb = poly_lc(b);
    Poly q(static_cast<size_t>(da - db) + 1, Int(0));
    for (int i = da - db; i >= 0; --i) {
        Int c = a[static_cast<size_t>(i + db)];
        for (auto& x : a) x *= lb;
        for (auto& x : q) x *= lb;
        q[static_cast<size_t>(i)] += c;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(i + j)] -= c * b[static_cast<size_t>(j)];
    }
    poly_trim(a);
    poly_trim(q);
    return {q, a};
}

inline Poly poly_derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(Int(i) * p[i]);
    poly_trim(r);
    return r;
}

inline Int poly_content(const Poly& p) {
    Int g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // 0 for the zero polynomial
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) {
        r = r * x + Rat(p[i]);
        r.canonicalize();
    }
    return r;
}

/// Exact sign of p(x) at a rational point.
inline int poly_sign_at(const Poly& p, const Rat& x) { return sgn(poly_eval(p, x)); }

inline QPoly qpoly_from(const Poly& p) {
    QPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(c);
    return r;
}

inline int qpoly_deg(const QPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
    return d;
}

/// Remainder of a mod b over Q.
inline QPoly qpoly_rem(QPoly a, const QPoly& b) {
    int db = qpoly_deg(b);
    int da = qpoly_deg(a);
    const Rat& lb = b[static_cast<size_t>(db)];
    for (int i = da - db; i >= 0; --i) {
        Rat c = a[static_cast<size_t>(i + db)] / lb;
        c.canonicalize();
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            a[static_cast<size_t>(i + j)] -= c * b[static_cast<size_t>(j)];
            a[static_cast<size_t>(i + j)].canonicalize();
        }
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline int qpoly_sign_at(const QPoly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) {
        r = r * x + p[i];
        r.canonicalize();
    }
    return sgn(r);
}

/// Sturm chain of f (f, f', then negated remainders).
inline std::vector<QPoly> sturm_chain(const Poly& f) {
    std::vector<QPoly> chain;
    chain.push_back(qpoly_from(f));
    QPoly d = qpoly_from(poly_derivative(f));
    if (qpoly_deg(d) >= 0) chain.push_back(d);
    while (chain.size() >= 2 && qpoly_deg(chain.back()) >= 1) {
        QPoly r = qpoly_rem(chain[chain.size() - 2], chain.back());
        if (qpoly_deg(r) < 0) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_sign_variations(const std::vector<QPoly>& chain, const Rat& x) {
    int v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = qpoly_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

/// Number of distinct real roots of f in (lo, hi], assuming f(lo) != 0.
inline int sturm_count(const Poly& f, const Rat& lo, const Rat& hi) {
    auto chain = sturm_chain(f);
    return sturm_sign_variations(chain, lo) - sturm_sign_variations(chain, hi);
}

}  // namespace zalpha
