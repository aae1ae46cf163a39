#pragma once

// Fraction-free (Bareiss) Gaussian elimination.  The core is generic over
// an integral domain so the same recurrence serves Z[alpha] matrices, the
// integer-polynomial Sylvester determinant behind char_poly, and plain
// integer determinants (transform matrices in lll).

#include <cstddef>
#include <functional>
#include <vector>

#include "zalpha/field.hpp"

namespace zalpha {

/// Dense matrix over Z[alpha]; all entries share one Field.
struct MatrixZA {
    const Field* field = nullptr;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Elem> data;  // row-major

    MatrixZA() = default;
    MatrixZA(const Field& f, size_t r, size_t c)
        : field(&f), rows(r), cols(c), data(r * c, f.zero()) {}

    Elem& at(size_t i, size_t j) { return data[i * cols + j]; }
    const Elem& at(size_t i, size_t j) const { return data[i * cols + j]; }
};

struct EliminationTrace {
    std::vector<size_t> pivot_rows;       // chosen pivot row per stage
    std::vector<size_t> max_opc_bits;     // peak opc bit length per stage
    int sign = 1;                         // parity of row swaps (0 once singular)
    bool singular = false;
};

// Ring concepts for the generic core: value type + mul / exact_div /
// is_zero / one.

struct IntRing {
    using Value = Int;
    Value zero() const { return Int(0); }
    Value one() const { return Int(1); }
    bool is_zero(const Value& a) const { return a == 0; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value exact_div(const Value& a, const Value& b) const {
        if (b == 0) throw DivisionByZero();
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (r != 0) throw InexactDivision();
        return q;
    }
};

struct IntPolyRing {
    using Value = Poly;
    Value zero() const { return Poly{}; }
    Value one() const { return Poly{Int(1)}; }
    bool is_zero(const Value& a) const { return poly_is_zero(a); }
    Value sub(const Value& a, const Value& b) const { return poly_sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return poly_mul(a, b); }
    Value exact_div(const Value& a, const Value& b) const { return poly_divexact(a, b); }
};

struct ZaRing {
    const Field* field;
    using Value = Elem;
    Value zero() const { return field->zero(); }
    Value one() const { return field->one(); }
    bool is_zero(const Value& a) const { return field->is_zero(a); }
    Value sub(const Value& a, const Value& b) const { return field->sub(a, b); }
    Value mul(const Value& a, const Value& b) const { return field->mul(a, b); }
    Value exact_div(const Value& a, const Value& b) const { return field->exact_div(a, b); }
};

/// In-place one-step Bareiss triangularization of a square matrix given as
/// rows of ring values.  Returns the row-swap parity (+1/-1), or 0 when a
/// fully zero pivot column makes the determinant vanish (early exit).
/// `on_stage(k)` runs after each elimination stage with the matrix updated.
template <class Ring>
int bareiss_core(const Ring& ring, std::vector<std::vector<typename Ring::Value>>& m,
                 std::vector<size_t>* pivot_rows = nullptr,
                 const std::function<void(size_t)>& on_stage = {}) {
    const size_t n = m.size();
    int sign = 1;
    typename Ring::Value prev = ring.one();
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && ring.is_zero(m[piv][k])) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        if (pivot_rows) pivot_rows->push_back(piv);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = ring.exact_div(
                    ring.sub(ring.mul(m[k][k], m[i][j]), ring.mul(m[i][k], m[k][j])), prev);
            m[i][k] = ring.zero();
        }
        prev = m[k][k];
        if (on_stage) on_stage(k);
    }
    return sign;
}

/// Triangularize a square Z[alpha] matrix; the returned matrix is upper
/// triangular with a_nn = det(M) * trace.sign.
std::pair<MatrixZA, EliminationTrace> triangularize(const MatrixZA& m);

/// Exact determinant (sign-corrected for row swaps).
Elem determinant(const MatrixZA& m);

/// Exact determinant of an integer polynomial matrix (square, row-major
/// rows of polys).  Used for the Sylvester resultant in char_poly.
Poly poly_matrix_det(std::vector<std::vector<Poly>> m);

/// Exact integer determinant (for unimodularity checks).
Int int_matrix_det(std::vector<std::vector<Int>> m);

}  // namespace zalpha
