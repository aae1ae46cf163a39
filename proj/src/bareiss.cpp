#include "zalpha/bareiss.hpp"

namespace zalpha {

namespace {

size_t opc_bits(const Field& f, const std::vector<std::vector<Elem>>& rows) {
    size_t bits = 0;
    for (const auto& row : rows)
        for (const auto& e : row) {
            Int v = f.opc(e);
            if (v != 0) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
        }
    return bits;
}

}  // namespace

std::pair<MatrixZA, EliminationTrace> triangularize(const MatrixZA& m) {
    if (m.rows != m.cols) throw NotSquare();
    const Field& f = *m.field;
    const size_t n = m.rows;

    std::vector<std::vector<Elem>> rows(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rows[i].push_back(m.at(i, j));

    EliminationTrace trace;
    ZaRing ring{&f};
    int sign = bareiss_core(ring, rows, &trace.pivot_rows, [&](size_t) {
        trace.max_opc_bits.push_back(opc_bits(f, rows));
    });
    trace.sign = sign;
    trace.singular = (sign == 0);

    MatrixZA out(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = std::move(rows[i][j]);
    return {std::move(out), std::move(trace)};
}

Elem determinant(const MatrixZA& m) {
    if (m.rows != m.cols) throw NotSquare();
    const Field& f = *m.field;
    if (m.rows == 0) return f.one();
    auto [tri, trace] = triangularize(m);
    if (trace.singular) return f.zero();
    Elem d = tri.at(m.rows - 1, m.rows - 1);
    return trace.sign < 0 ? f.neg(std::move(d)) : d;
}

Poly poly_matrix_det(std::vector<std::vector<Poly>> m) {
    if (m.empty()) return Poly{Int(1)};
    IntPolyRing ring;
    int sign = bareiss_core(ring, m);
    if (sign == 0) return {};
    Poly d = m.back().back();
    return sign < 0 ? poly_neg(std::move(d)) : d;
}

Int int_matrix_det(std::vector<std::vector<Int>> m) {
    if (m.empty()) return Int(1);
    IntRing ring;
    int sign = bareiss_core(ring, m);
    if (sign == 0) return Int(0);
    return sign < 0 ? Int(-m.back().back()) : m.back().back();
}

}  // namespace zalpha
