#pragma once

// Real algebraic number field Q(alpha), alpha given by a monic squarefree
// integer polynomial and an isolating interval.  Elements live in Z[alpha]
// as integer coefficient vectors against 1, alpha, ..., alpha^(m-1).

#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "zalpha/errors.hpp"
#include "zalpha/numbers.hpp"
#include "zalpha/poly.hpp"

namespace zalpha {

/// Element of Z[alpha]: a = sum c[i] * alpha^i, c.size() == field degree.
struct Elem {
    std::vector<Int> c;

    bool operator==(const Elem& o) const { return c == o.c; }
    bool operator!=(const Elem& o) const { return c != o.c; }
};

/// Exact representation of 1/b as num/den with num in Z[alpha], den in Z.
/// Normalized: gcd(content(num), den) == 1 and den > 0.
struct InverseRep {
    Elem num;
    Int den;
};

/// Record of one subresultant PRS run (degree sequence of the remainders
/// and the peak coefficient bit length at each step).
struct SubresultantTrace {
    std::vector<int> degree_sequence;
    std::vector<size_t> coefficient_bit_peaks;
};

/// Refined isolating interval u/d <= alpha <= v/d with v - u <= 1.
struct AlphaApprox {
    Int d;
    Int u;
    Int v;
};

/// How certified sign / rounding reach their answer: progressive interval
/// refinement with doubling denominators, or a direct jump to the
/// worst-case ceiling from the threshold inequalities.
enum class RefinePolicy { Progressive, DirectCeiling };

/// Compute the alpha-power reduction table r[k][l] for a monic polynomial
/// given by its m non-leading coefficients:
///   alpha^(m+k) = sum_l r[k][l] alpha^l,  0 <= k <= m-2.
std::vector<std::vector<Int>> reduction_table(const std::vector<Int>& f_coeffs);

class Field {
  public:
    /// f_coeffs are the m non-leading coefficients f_0..f_{m-1} of a monic
    /// degree-m polynomial; (lo, hi) must isolate exactly one real root.
    Field(std::vector<Int> f_coeffs, Rat lo, Rat hi);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    // -- descriptor ---------------------------------------------------------

    int degree() const { return m_; }
    const std::vector<Int>& min_poly() const { return f_; }
    const Poly& min_poly_full() const { return f_full_; }
    std::pair<Rat, Rat> isolating_interval() const { return {lo_, hi_}; }
    const std::vector<std::vector<Int>>& reduction_tbl() const { return rtable_; }
    const Int& const_M() const { return const_M_; }
    const Int& const_P() const { return const_P_; }
    const Int& const_Q() const { return const_Q_; }
    const Int& const_S() const { return const_S_; }
    const Int& f_inf_norm() const { return f_inf_; }

    /// Set when refinement hits an exact rational root (possible only for
    /// reducible f; the paper assumes an irreducible minimal polynomial).
    std::optional<Rat> exact_root() const;

    // -- elements -----------------------------------------------------------

    Elem zero() const { return Elem{std::vector<Int>(static_cast<size_t>(m_), Int(0))}; }
    Elem one() const { return from_int(1); }
    Elem from_int(const Int& s) const;
    Elem alpha() const;
    /// Validates length == degree.
    Elem elem(std::vector<Int> coeffs) const;

    bool is_zero(const Elem& a) const;
    /// True iff a lies in Z, i.e. all coefficients above the constant are 0.
    bool is_rational_integer(const Elem& a) const;
    Int opc(const Elem& a) const;

    // -- ring and field arithmetic (arith) -----------------------------------

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(Elem a) const;
    Elem scalar_mul(const Int& s, Elem a) const;
    Elem mul(const Elem& a, const Elem& b) const;

    /// Extended subresultant PRS inverse; see InverseRep for normalization.
    InverseRep inverse(const Elem& b) const { return inverse(b, nullptr); }
    InverseRep inverse(const Elem& b, SubresultantTrace* trace) const;

    /// Product of conjugates, sign included (= (-1)^m * char_poly constant
    /// term); norm(0) = 0.
    Int norm(const Elem& b) const;

    /// Quotient a/b when b exactly divides a in Z[alpha].
    Elem exact_div(const Elem& a, const Elem& b) const;

    /// Characteristic polynomial of b: monic of degree m, returned as its m
    /// non-leading coefficients h_0..h_{m-1}.
    std::vector<Int> char_poly(const Elem& b) const;

    // -- certified order operations (real_order) -----------------------------

    AlphaApprox refine_alpha(const Int& d) const;

    int sign(const Elem& a, RefinePolicy policy = RefinePolicy::Progressive) const;
    /// -1, 0, +1 for a < b, a == b, a > b.
    int cmp(const Elem& a, const Elem& b,
            RefinePolicy policy = RefinePolicy::Progressive) const;

    Int floor_div_int(const Elem& a, const Int& s,
                      RefinePolicy policy = RefinePolicy::Progressive) const;
    Int ceil_div_int(const Elem& a, const Int& s,
                     RefinePolicy policy = RefinePolicy::Progressive) const;
    /// Round half up at exact half-integer ties.
    Int round_div_int(const Elem& a, const Int& s,
                      RefinePolicy policy = RefinePolicy::Progressive) const;

    Int floor_div(const Elem& a, const Elem& b,
                  RefinePolicy policy = RefinePolicy::Progressive) const;
    Int ceil_div(const Elem& a, const Elem& b,
                 RefinePolicy policy = RefinePolicy::Progressive) const;
    Int round_div(const Elem& a, const Elem& b,
                  RefinePolicy policy = RefinePolicy::Progressive) const;

    /// Worst-case refinement ceilings behind sign and rounding.
    Int sign_ceiling(const Elem& a) const;
    Int round_ceiling(const Elem& a, const Int& s) const;

    /// Certified rational enclosure of the real value of a, computed from
    /// a denominator-d refinement of alpha.
    std::pair<Rat, Rat> enclose(const Elem& a, const Int& d) const;

    /// log2 |a| for reporting (0 element maps to -inf).  Not certified.
    double approx_log2_abs(const Elem& a) const;

  private:
    void check(const Elem& a) const;
    /// Refine the cached interval to width <= 1/d; returns (lo, hi) with
    /// f(lo) and f(hi) of opposite sign, or lo == hi on an exact root.
    std::pair<Rat, Rat> refined_interval(const Int& d) const;
    int sign_f(const Rat& x) const;

    int m_;
    std::vector<Int> f_;  // non-leading coefficients
    Poly f_full_;         // f with leading 1
    Rat lo_, hi_;
    std::vector<std::vector<Int>> rtable_;
    Int f_inf_;
    Int const_M_, const_P_, const_Q_, const_S_;

    mutable std::mutex cache_mutex_;
    mutable Rat cur_lo_, cur_hi_;
    mutable bool have_exact_root_ = false;
    mutable Rat exact_root_val_;
};

}  // namespace zalpha
