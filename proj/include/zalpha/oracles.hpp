#pragma once

// Independent verification machinery: certified interval evaluation, naive
// reference implementations (characteristic-polynomial inverse, cofactor
// determinants, shortest-vector enumeration) and randomized property
// suites.  Everything here is a second opinion; nothing in the main code
// paths depends on this module.

#include <string>
#include <vector>

#include "zalpha/bareiss.hpp"
#include "zalpha/field.hpp"
#include "zalpha/lll.hpp"

namespace zalpha {

struct RealInterval {
    Rat lo;
    Rat hi;

    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    Rat width() const { return hi - lo; }
};

/// Certified enclosure of the real value of a with width < 2^-precision_bits.
RealInterval interval_eval(const Field& f, const Elem& a, unsigned precision_bits);

/// 1/b from the characteristic polynomial via the Horner chain
/// b~ = b^{m-1} + h_{m-1} b^{m-2} + ... + h_1, den = -h_0; normalized the
/// same way as Field::inverse.
InverseRep naive_inverse(const Field& f, const Elem& b);

/// Exact determinant by cofactor expansion (intended for n <= 6).
Elem brute_det(const MatrixZA& m);

struct ShortestVector {
    std::vector<Int> coeffs;      // integer combination achieving the minimum
    std::vector<Elem> vec;        // the lattice vector itself
    Elem norm_sq;                 // exact squared euclidean norm in Z[alpha]
    RealInterval norm_interval;   // 64-bit enclosure of its real value
};

/// Enumerate all nonzero integer combinations with |c_i| <= coeff_bound and
/// return the minimizer of the squared norm (exact comparisons).  An upper
/// bound on L0 in general; exact when the true minimizer is in the box.
ShortestVector shortest_vector_enum(const MatrixZA& basis, long coeff_bound);

struct CheckReport {
    std::string check;
    uint64_t samples = 0;
    uint64_t failures = 0;
    double worst_ratio = 0.0;  // max observed/bound over the run
};

/// Deterministic random element with coefficients uniform in [-bound, bound].
class ElemSampler {
  public:
    ElemSampler(const Field& f, unsigned long seed);
    Elem next(const Int& bound);
    Elem next_nonzero(const Int& bound);
    Int next_int(const Int& bound);          // in [-bound, bound]
    Int next_nonzero_int(const Int& bound);

  private:
    const Field& field_;
    gmp_randclass rng_;
};

/// Eqs. (5)-(9) and the magnitude bounds (16)/(17) with the stored integer
/// constants, on `samples` random pairs of opc <= bound.
std::vector<CheckReport> check_growth_bounds(const Field& f, uint64_t samples,
                                             const Int& bound, unsigned long seed);

/// sign/cmp against the 256-bit interval oracle (including continued-fraction
/// adversaries when degree == 2) and the floor/ceil/round contracts.
std::vector<CheckReport> check_order(const Field& f, uint64_t samples, const Int& bound,
                                     unsigned long seed);

/// b b~ == N, subresultant inverse == characteristic-polynomial inverse
/// (cross-multiplied), and |N(b)| <= Q opc(b)^m.
std::vector<CheckReport> check_inverse(const Field& f, uint64_t samples, const Int& bound,
                                       unsigned long seed);

/// determinant == brute_det on random matrices n <= 5, plus the intermediate
/// size bound n! M^{n-1} opc^n and det(AB) = det(A)det(B).
std::vector<CheckReport> check_bareiss(const Field& f, uint64_t samples, const Int& bound,
                                       unsigned long seed);

/// lll_reduce on random bases: verify_reduced, det U = +-1, U input = output,
/// Gram determinant conservation, t = 2s + n - 1, potential monotonicity.
std::vector<CheckReport> check_lll(const Field& f, uint64_t samples, const Int& bound,
                                   unsigned long seed);

/// Dispatch by suite name in {growth, order, inverse, bareiss, lll}.
/// Throws ParseError for an unknown suite.
std::vector<CheckReport> run_suite(const Field& f, const std::string& suite,
                                   uint64_t samples, unsigned long seed);

/// CSV with header "check,samples,failures,worst_ratio".
std::string report_csv(const std::vector<CheckReport>& reports);

}  // namespace zalpha
