#include "zalpha/bareiss.hpp"
#include "zalpha/field.hpp"

namespace zalpha {

Elem Field::add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Elem Field::sub(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

Elem Field::neg(Elem a) const {
    check(a);
    for (auto& c : a.c) c = -c;
    return a;
}

Elem Field::scalar_mul(const Int& s, Elem a) const {
    check(a);
    for (auto& c : a.c) c *= s;
    return a;
}

Elem Field::mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    const size_t m = static_cast<size_t>(m_);
    // degree-(2m-2) convolution, then reduce alpha^(m+k) via the r-table
    std::vector<Int> d(2 * m - 1, Int(0));
    for (size_t i = 0; i < m; ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < m; ++j) d[i + j] += a.c[i] * b.c[j];
    }
    Elem r = zero();
    for (size_t l = 0; l < m; ++l) r.c[l] = d[l];
    for (size_t k = 0; k + 1 < m; ++k) {
        if (d[m + k] == 0) continue;
        for (size_t l = 0; l < m; ++l) r.c[l] += d[m + k] * rtable_[k][l];
    }
    return r;
}

namespace {

size_t poly_bit_peak(const Poly& p) {
    size_t bits = 0;
    for (const auto& c : p)
        if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

Int content_with(const Poly& p, const Int& extra) {
    Int g = abs_int(extra);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

}  // namespace

InverseRep Field::inverse(const Elem& b, SubresultantTrace* trace) const {
    check(b);
    if (is_zero(b)) throw DivisionByZero();

    const unsigned long mu = static_cast<unsigned long>(m_);

    if (is_rational_integer(b)) {
        // N(s) = s^m, s~ = s^(m-1)
        Elem num = from_int(pow_int(b.c[0], mu - 1));
        Int den = pow_int(b.c[0], mu);
        Int g = content_with(num.c, den);
        if (g > 1) {
            for (auto& c : num.c) c /= g;
            den /= g;
        }
        if (den < 0) {
            den = -den;
            num = neg(std::move(num));
        }
        return {std::move(num), std::move(den)};
    }

    // Subresultant PRS on (f, g) with a cofactor sequence tracking the
    // multiple of g: cur = (vcur / vden_cur) * g  (mod f).
    Poly a = f_full_;
    Poly bp = b.c;
    poly_trim(bp);

    Poly va{};          // cofactor of a (starts at 0: a = f)
    Int va_den = 1;
    Poly vb{Int(1)};    // cofactor of b
    Int vb_den = 1;

    if (trace) {
        trace->degree_sequence = {poly_deg(a), poly_deg(bp)};
        trace->coefficient_bit_peaks = {poly_bit_peak(a), poly_bit_peak(bp)};
    }

    int delta = poly_deg(a) - poly_deg(bp);
    Int beta = (delta % 2 == 0) ? Int(-1) : Int(1);  // (-1)^(delta+1)
    Int psi(-1);

    while (true) {
        auto pd = poly_pseudo_divide(a, bp);
        if (poly_is_zero(pd.rem)) break;

        Poly r = poly_divexact_int(pd.rem, beta);

        // cofactor update: v_rem = lc(b)^(delta+1) va - q vb over the
        // common denominator va_den * vb_den; beta is absorbed into the
        // denominator so the update never relies on exact divisibility.
        Int lead = pow_int(poly_lc(bp), static_cast<unsigned long>(delta) + 1);
        Poly vr = poly_sub(poly_scale(lead * vb_den, va),
                           poly_scale(va_den, poly_mul(pd.quo, vb)));
        Int vr_den = va_den * vb_den * beta;
        Int g = content_with(vr, vr_den);
        if (g > 1) {
            for (auto& c : vr) c /= g;
            vr_den /= g;
        }

        // advance the subresultant scheme
        if (delta > 0) {
            Int num = pow_int(-poly_lc(bp), static_cast<unsigned long>(delta));
            if (delta > 1) {
                Int den = pow_int(psi, static_cast<unsigned long>(delta) - 1);
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (rem != 0) throw Error("subresultant scheme: psi update not exact");
                psi = q;
            } else {
                psi = num;
            }
        }
        a = std::move(bp);
        va = std::move(vb);
        va_den = vb_den;
        bp = std::move(r);
        vb = std::move(vr);
        vb_den = vr_den;

        if (trace) {
            trace->degree_sequence.push_back(poly_deg(bp));
            trace->coefficient_bit_peaks.push_back(poly_bit_peak(bp));
        }

        delta = poly_deg(a) - poly_deg(bp);
        beta = -poly_lc(a) * pow_int(psi, static_cast<unsigned long>(delta));
    }

    if (poly_deg(bp) > 0) throw ZeroDivisor();

    // bp is the constant c with (vb / vb_den)(alpha) * b = c, i.e.
    // vb(alpha) * b = c * vb_den.
    Elem num = zero();
    for (size_t i = 0; i < vb.size(); ++i) num.c[i] = vb[i];
    Int den = bp[0] * vb_den;

    Int g = content_with(num.c, den);
    if (g > 1) {
        for (auto& c : num.c) c /= g;
        den /= g;
    }
    if (den < 0) {
        den = -den;
        num = neg(std::move(num));
    }
    if (mul(b, num) != from_int(den)) throw Error("inverse: b * num != den (internal defect)");
    return {std::move(num), std::move(den)};
}

std::vector<Int> Field::char_poly(const Elem& b) const {
    check(b);
    const int m = m_;
    Poly g = b.c;
    poly_trim(g);
    int s = poly_deg(g);

    std::vector<Int> h(static_cast<size_t>(m), Int(0));
    if (s <= 0) {
        // b is a rational integer: h = (x - g0)^m, h_k = C(m,k)(-g0)^(m-k)
        Int g0 = s < 0 ? Int(0) : g[0];
        for (int k = 0; k < m; ++k) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                         static_cast<unsigned long>(k));
            h[static_cast<size_t>(k)] =
                binom * pow_int(-g0, static_cast<unsigned long>(m - k));
        }
        return h;
    }

    // Sylvester matrix of f (degree m) and p(y) = x - g(y) (degree s in y)
    // with entries in Z[x]; its determinant is the monic char polynomial.
    const size_t dim = static_cast<size_t>(m + s);
    std::vector<std::vector<Poly>> sylv(dim, std::vector<Poly>(dim, Poly{}));
    for (int row = 0; row < s; ++row)
        for (int j = 0; j <= m; ++j) {
            Int coeff = (j == 0) ? Int(1) : f_full_[static_cast<size_t>(m - j)];
            if (coeff != 0)
                sylv[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = Poly{coeff};
        }
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= s; ++j) {
            // p coefficients, descending in y: p_s, ..., p_1, p_0
            Poly entry;
            if (j == s)
                entry = Poly{-g[0], Int(1)};  // x - g0
            else if (-g[static_cast<size_t>(s - j)] != 0)
                entry = Poly{-g[static_cast<size_t>(s - j)]};
            sylv[static_cast<size_t>(s + row)][static_cast<size_t>(row + j)] = std::move(entry);
        }

    Poly hp = poly_matrix_det(std::move(sylv));
    if (poly_deg(hp) != m || poly_lc(hp) != 1)
        throw Error("char_poly: resultant is not monic of degree m (internal defect)");
    for (int k = 0; k < m; ++k) h[static_cast<size_t>(k)] = hp[static_cast<size_t>(k)];
    return h;
}

Int Field::norm(const Elem& b) const {
    auto h = char_poly(b);
    return (m_ % 2 == 0) ? h[0] : Int(-h[0]);
}

Elem Field::exact_div(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    if (is_zero(b)) throw DivisionByZero();

    Elem t = a;
    Int den;
    if (is_rational_integer(b)) {
        den = b.c[0];
    } else {
        InverseRep inv = inverse(b);
        t = mul(a, inv.num);
        den = inv.den;
    }
    for (auto& c : t.c) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
        if (r != 0) throw InexactDivision();
        c = q;
    }
    return t;
}

}  // namespace zalpha
