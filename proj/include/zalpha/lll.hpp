#pragma once

// Exact LLL reduction over Z[alpha]^n using the integral lambda/d
// representation of the Gram-Schmidt coefficients (mu_ij = lambda_ij/d_j,
// both j x j Gram determinants), with fraction-free Lovász tests decided
// by certified sign computations.

#include <cstdint>
#include <string>
#include <vector>

#include "zalpha/bareiss.hpp"
#include "zalpha/field.hpp"

namespace zalpha {

/// LLL parameter delta = p/q, 1/4 < p/q < 1.
struct Delta {
    Int p{3};
    Int q{4};
};

struct LLLStatsRow {
    uint64_t iteration;
    std::string kind;  // "swap" | "reduce"
    size_t k;
    double log2_d;        // log2 |D|, D = d_1...d_n (reporting only)
    size_t max_opc_bits;  // over all lambda, d, basis entries
};

struct LLLStats {
    uint64_t iterations = 0;  // t
    uint64_t swaps = 0;       // s
    uint64_t reductions = 0;  // r
    uint64_t potential_violations = 0;
    size_t max_opc_bits = 0;
    double wall_seconds = 0.0;
    std::vector<LLLStatsRow> rows;
};

/// Mutable LLL working state.  Indices are 1-based to match the usual
/// presentation: basis[1..n], lambda[i][j] for 1 <= j < i <= n,
/// d[0..n] with d[0] = 1.
struct LLLState {
    const Field* field = nullptr;
    size_t n = 0;
    size_t dim = 0;
    std::vector<std::vector<Elem>> basis;
    std::vector<std::vector<Elem>> lambda;
    std::vector<Elem> d;
    size_t k = 2;
    std::vector<std::vector<Int>> transform;  // current = transform * input
    LLLStats stats;
};

struct LLLOptions {
    Delta delta{};
    /// Assert D_new < delta * D_old exactly at every swap (counted in
    /// stats.potential_violations).
    bool check_potential = false;
    /// Record the per-iteration CSV rows (counters are always kept).
    bool record_stats = true;
};

struct LLLResult {
    MatrixZA basis;
    std::vector<std::vector<Int>> transform;
    LLLStats stats;
};

void validate_delta(const Delta& d);

/// Integral Gram-Schmidt setup: lambda table and d sequence by the exact
/// division recurrences; throws DependentBasis when some d_j vanishes.
LLLState lll_init(const MatrixZA& basis);

/// True when a swap is required at index k (2 <= k <= n), i.e. when
/// q (d_k d_{k-2} + lambda_{k,k-1}^2) < p d_{k-1}^2.
bool lovasz_test(const LLLState& st, size_t k, const Delta& delta);

/// b_k -= round(lambda_{kl}/d_l) b_l with the matching lambda updates;
/// afterwards 2 |lambda_{kl}| <= d_l.
void size_reduce(LLLState& st, size_t k, size_t l);

/// Exchange b_k and b_{k-1} and apply the integral update formulas to the
/// lambda table and d_{k-1}; sets st.k = max(k-1, 2).
void swap_step(LLLState& st, size_t k);

LLLResult lll_reduce(const MatrixZA& basis, const LLLOptions& opts = {});

/// Recompute lambda/d from scratch and check both reducedness conditions.
bool verify_reduced(const MatrixZA& basis, const Delta& delta);

/// Write the per-iteration stats rows as CSV (header included).
std::string stats_csv(const LLLStats& stats);

}  // namespace zalpha
