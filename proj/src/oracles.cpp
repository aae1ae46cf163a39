#include "zalpha/oracles.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace zalpha {

namespace {

double ratio_of(const Int& observed, const Int& bound) {
    if (bound == 0) return observed == 0 ? 0.0 : 1.0;
    return Rat(Rat(observed) / Rat(bound)).get_d();
}

double ratio_of(const Rat& observed, const Rat& bound) {
    if (bound == 0) return sgn(observed) == 0 ? 0.0 : 1.0;
    return Rat(observed / bound).get_d();
}

void tally(CheckReport& rep, bool ok, double ratio) {
    ++rep.samples;
    if (!ok) ++rep.failures;
    rep.worst_ratio = std::max(rep.worst_ratio, ratio);
}

Rat max_abs(const RealInterval& iv) {
    Rat a = abs(iv.lo), b = abs(iv.hi);
    return a > b ? a : b;
}
Rat min_abs(const RealInterval& iv) {
    if (iv.contains_zero()) return Rat(0);
    Rat a = abs(iv.lo), b = abs(iv.hi);
    return a < b ? a : b;
}

MatrixZA random_matrix(const Field& f, ElemSampler& smp, size_t n, const Int& bound) {
    MatrixZA m(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = smp.next(bound);
    return m;
}

MatrixZA mat_mul(const MatrixZA& a, const MatrixZA& b) {
    const Field& f = *a.field;
    MatrixZA c(f, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < b.cols; ++j) {
            Elem s = f.zero();
            for (size_t t = 0; t < a.cols; ++t) s = f.add(s, f.mul(a.at(i, t), b.at(t, j)));
            c.at(i, j) = std::move(s);
        }
    return c;
}

/// Continued-fraction convergents p/q of alpha (q up to ~2^140, i.e.
/// numerators past the 10^40 scale), as pairs.  These make p - q*alpha
/// adversarially close to zero.
std::vector<std::pair<Int, Int>> alpha_convergents(const Field& f) {
    const Int d = pow_int(Int(2), 320);
    AlphaApprox ap = f.refine_alpha(d);
    Rat x(ap.u, d);
    x.canonicalize();

    std::vector<std::pair<Int, Int>> out;
    Int p0(1), q0(0), p1 = rat_floor(x), q1(1);
    out.emplace_back(p1, q1);
    Rat frac = x - Rat(p1);
    const Int qmax = pow_int(Int(2), 140);
    while (sgn(frac) != 0 && q1 < qmax) {
        x = 1 / frac;
        Int a = rat_floor(x);
        Int p2 = a * p1 + p0;
        Int q2 = a * q1 + q0;
        out.emplace_back(p2, q2);
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        frac = x - Rat(a);
    }
    return out;
}

}  // namespace

RealInterval interval_eval(const Field& f, const Elem& a, unsigned precision_bits) {
    if (f.is_zero(a)) return {Rat(0), Rat(0)};
    Rat target(Int(1), pow_int(Int(2), precision_bits));
    target.canonicalize();
    Int d = pow_int(Int(2), precision_bits);
    while (true) {
        auto [lo, hi] = f.enclose(a, d);
        if (hi - lo < target) return {std::move(lo), std::move(hi)};
        d *= 2;
    }
}

InverseRep naive_inverse(const Field& f, const Elem& b) {
    if (f.is_zero(b)) throw DivisionByZero();
    std::vector<Int> h = f.char_poly(b);
    if (h[0] == 0) throw ZeroDivisor();
    const int m = f.degree();

    // Horner chain from h(b) = 0:  b (b^{m-1} + h_{m-1} b^{m-2} + ... + h_1)
    // = -h_0.
    Elem num = f.one();
    for (int k = 1; k < m; ++k)
        num = f.add(f.mul(num, b), f.from_int(h[static_cast<size_t>(m - k)]));
    Int den = -h[0];

    Int g = abs_int(den);
    for (const auto& c : num.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        for (auto& c : num.c) c /= g;
        den /= g;
    }
    if (den < 0) {
        den = -den;
        num = f.neg(std::move(num));
    }
    return {std::move(num), std::move(den)};
}

Elem brute_det(const MatrixZA& m) {
    if (m.rows != m.cols) throw NotSquare();
    const Field& f = *m.field;
    const size_t n = m.rows;
    if (n == 0) return f.one();

    // cofactor expansion along the first row, row-set recursion
    std::vector<size_t> cols(n);
    for (size_t j = 0; j < n; ++j) cols[j] = j;

    std::function<Elem(size_t, std::vector<size_t>&)> rec =
        [&](size_t row, std::vector<size_t>& cs) -> Elem {
        if (cs.size() == 1) return m.at(row, cs[0]);
        Elem acc = f.zero();
        for (size_t j = 0; j < cs.size(); ++j) {
            if (f.is_zero(m.at(row, cs[j]))) continue;
            std::vector<size_t> rest;
            rest.reserve(cs.size() - 1);
            for (size_t t = 0; t < cs.size(); ++t)
                if (t != j) rest.push_back(cs[t]);
            Elem term = f.mul(m.at(row, cs[j]), rec(row + 1, rest));
            acc = (j % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
        }
        return acc;
    };
    return rec(0, cols);
}

ShortestVector shortest_vector_enum(const MatrixZA& basis, long coeff_bound) {
    const Field& f = *basis.field;
    const size_t n = basis.rows;
    const size_t dim = basis.cols;

    ShortestVector best;
    bool have = false;

    std::vector<long> c(n, -coeff_bound);
    auto advance = [&]() -> bool {
        for (size_t i = 0; i < n; ++i) {
            if (c[i] < coeff_bound) {
                ++c[i];
                return true;
            }
            c[i] = -coeff_bound;
        }
        return false;
    };

    do {
        // skip 0 and one of each +-x pair (norms coincide)
        size_t lead = n;
        for (size_t i = 0; i < n; ++i)
            if (c[i] != 0) {
                lead = i;
                break;
            }
        if (lead == n || c[lead] < 0) continue;

        std::vector<Elem> vec(dim, f.zero());
        for (size_t i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            for (size_t j = 0; j < dim; ++j)
                vec[j] = f.add(vec[j], f.scalar_mul(Int(c[i]), basis.at(i, j)));
        }
        Elem nsq = f.zero();
        for (size_t j = 0; j < dim; ++j) nsq = f.add(nsq, f.mul(vec[j], vec[j]));

        if (!have || f.cmp(nsq, best.norm_sq) < 0) {
            have = true;
            best.coeffs.assign(c.begin(), c.end());
            best.vec = std::move(vec);
            best.norm_sq = std::move(nsq);
        }
    } while (advance());

    best.norm_interval = interval_eval(f, best.norm_sq, 64);
    return best;
}

ElemSampler::ElemSampler(const Field& f, unsigned long seed)
    : field_(f), rng_(gmp_randinit_default) {
    rng_.seed(seed);
}

Int ElemSampler::next_int(const Int& bound) {
    return rng_.get_z_range(2 * bound + 1) - bound;
}

Int ElemSampler::next_nonzero_int(const Int& bound) {
    Int v;
    do v = next_int(bound);
    while (v == 0);
    return v;
}

Elem ElemSampler::next(const Int& bound) {
    Elem e = field_.zero();
    for (auto& c : e.c) c = next_int(bound);
    return e;
}

Elem ElemSampler::next_nonzero(const Int& bound) {
    Elem e;
    do e = next(bound);
    while (field_.is_zero(e));
    return e;
}

std::vector<CheckReport> check_growth_bounds(const Field& f, uint64_t samples,
                                             const Int& bound, unsigned long seed) {
    ElemSampler smp(f, seed);
    const unsigned long m = static_cast<unsigned long>(f.degree());
    CheckReport add{"add_bound"}, scal{"scalar_exact"}, mul{"mul_bound"},
        inv{"inverse_bound"}, nrm{"norm_bound"}, mag_up{"magnitude_upper"},
        mag_lo{"magnitude_lower"};

    for (uint64_t i = 0; i < samples; ++i) {
        Elem a = smp.next(bound);
        Elem b = smp.next_nonzero(bound);
        Int s = smp.next_int(bound);
        Int oa = f.opc(a), ob = f.opc(b);

        Int t = oa + ob;
        Int o = f.opc(f.add(a, b));
        tally(add, o <= t, ratio_of(o, t));

        Int se = abs_int(s) * oa;
        Int so = f.opc(f.scalar_mul(s, a));
        tally(scal, so == se, ratio_of(so, se));

        Int mb = f.const_M() * oa * ob;
        Int mo = f.opc(f.mul(a, b));
        tally(mul, mo <= mb, ratio_of(mo, mb));

        InverseRep ir = f.inverse(b);
        Int ib = f.const_P() * pow_int(ob, m - 1);
        Int io = f.opc(ir.num);
        tally(inv, io <= ib, ratio_of(io, ib));

        Int nb = f.const_Q() * pow_int(ob, m);
        Int no = abs_int(f.norm(b));
        tally(nrm, no <= nb, ratio_of(no, nb));

        RealInterval iv = interval_eval(f, a, 32);
        Rat ub = Rat(f.const_S()) * Rat(oa);
        tally(mag_up, max_abs(iv) <= ub, ratio_of(max_abs(iv), ub));

        Rat lb(Int(1), f.const_P() * f.const_S() * pow_int(ob, m - 1));
        lb.canonicalize();
        RealInterval ivb = interval_eval(f, b, 32);
        unsigned bits = 64;
        while (min_abs(ivb) < lb && bits <= 4096) {
            ivb = interval_eval(f, b, bits);
            bits *= 2;
        }
        tally(mag_lo, min_abs(ivb) >= lb, ratio_of(lb, min_abs(ivb)));
    }
    return {add, scal, mul, inv, nrm, mag_up, mag_lo};
}

std::vector<CheckReport> check_order(const Field& f, uint64_t samples, const Int& bound,
                                     unsigned long seed) {
    ElemSampler smp(f, seed);
    CheckReport sign_rep{"sign_oracle"}, floor_rep{"floor_contract"},
        coh{"round_coherence"}, fdiv_rep{"floor_div_contract"}, adv{"adversary_signs"};

    auto oracle_sign = [&](const Elem& a) -> int {
        if (f.is_zero(a)) return 0;
        unsigned bits = 256;
        RealInterval iv = interval_eval(f, a, bits);
        while (iv.contains_zero()) {
            bits *= 2;
            iv = interval_eval(f, a, bits);
        }
        return sgn(iv.lo);
    };

    for (uint64_t i = 0; i < samples; ++i) {
        Elem a = smp.next(bound);
        tally(sign_rep, f.sign(a) == oracle_sign(a), 1.0);

        Int s = smp.next_nonzero_int(bound);
        Int q = f.floor_div_int(a, s);
        Elem aa = sgn(s) < 0 ? f.neg(a) : a;
        Int ss = abs_int(s);
        bool ok = f.sign(f.sub(aa, f.from_int(ss * q))) >= 0 &&
                  f.sign(f.sub(aa, f.from_int(ss * (q + 1)))) < 0;
        tally(floor_rep, ok, 1.0);

        Int c = f.ceil_div_int(a, s);
        Int r = f.round_div_int(a, s);
        bool exact = f.is_rational_integer(a) && a.c[0] % s == 0;
        bool cok = exact ? (c == q && r == q) : (c == q + 1 && (r == q || r == c));
        tally(coh, cok, 1.0);

        Elem b = smp.next_nonzero(bound);
        Int qe = f.floor_div(a, b);
        Elem ab = f.sign(b) < 0 ? f.neg(a) : a;
        Elem bb = f.sign(b) < 0 ? f.neg(b) : b;
        bool dok = f.sign(f.sub(ab, f.scalar_mul(qe, bb))) >= 0 &&
                   f.sign(f.sub(ab, f.scalar_mul(qe + 1, bb))) < 0;
        tally(fdiv_rep, dok, 1.0);
    }

    if (f.degree() >= 2) {
        for (const auto& [p, q] : alpha_convergents(f)) {
            Elem e = f.zero();
            e.c[0] = p;
            e.c[1] = -q;
            tally(adv, f.sign(e) == oracle_sign(e), 1.0);
            Elem ne = f.neg(e);
            tally(adv, f.sign(ne) == oracle_sign(ne), 1.0);
        }
    } else {
        tally(adv, true, 0.0);
    }
    return {sign_rep, floor_rep, coh, fdiv_rep, adv};
}

std::vector<CheckReport> check_inverse(const Field& f, uint64_t samples, const Int& bound,
                                       unsigned long seed) {
    ElemSampler smp(f, seed);
    const unsigned long m = static_cast<unsigned long>(f.degree());
    CheckReport ident{"inverse_identity"}, oracle{"inverse_oracle"}, nb{"norm_bound"},
        nid{"norm_identity"};

    for (uint64_t i = 0; i < samples; ++i) {
        Elem b = smp.next_nonzero(bound);
        InverseRep sr = f.inverse(b);
        tally(ident, f.mul(b, sr.num) == f.from_int(sr.den), 1.0);

        InverseRep cp = naive_inverse(f, b);
        tally(oracle, f.scalar_mul(cp.den, sr.num) == f.scalar_mul(sr.den, cp.num), 1.0);

        Int nrm = f.norm(b);
        Int qb = f.const_Q() * pow_int(f.opc(b), m);
        tally(nb, abs_int(nrm) <= qb, ratio_of(abs_int(nrm), qb));

        // N(b) * b~ / N = b~ exactly: b * (N/den) * num = N, i.e.
        // den divides N and b * num * (N/den) == N.
        tally(nid, nrm % sr.den == 0 &&
                       f.mul(b, f.scalar_mul(nrm / sr.den, sr.num)) == f.from_int(nrm),
              1.0);
    }
    return {ident, oracle, nb, nid};
}

std::vector<CheckReport> check_bareiss(const Field& f, uint64_t samples, const Int& bound,
                                       unsigned long seed) {
    ElemSampler smp(f, seed);
    CheckReport det_rep{"det_oracle"}, size_rep{"size_bound"}, mult{"det_multiplicative"};

    for (uint64_t i = 0; i < samples; ++i) {
        size_t n = 2 + static_cast<size_t>(smp.next_int(1).get_si() + 1);  // 2..4
        MatrixZA m = random_matrix(f, smp, n, bound);
        tally(det_rep, determinant(m) == brute_det(m), 1.0);

        // intermediate size bound n! M^{n-1} C^n, checked on exact opc values
        Int c = 1;
        for (const auto& e : m.data) c = std::max(c, f.opc(e));
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        Int sbound = fact * pow_int(f.const_M(), static_cast<unsigned long>(n - 1)) *
                     pow_int(c, static_cast<unsigned long>(n));
        std::vector<std::vector<Elem>> rows(n);
        for (size_t r = 0; r < n; ++r)
            for (size_t j = 0; j < n; ++j) rows[r].push_back(m.at(r, j));
        Int peak = 0;
        ZaRing ring{&f};
        bareiss_core(ring, rows, nullptr, [&](size_t) {
            for (const auto& row : rows)
                for (const auto& e : row) peak = std::max(peak, f.opc(e));
        });
        tally(size_rep, peak <= sbound, ratio_of(peak, sbound));

        MatrixZA a3 = random_matrix(f, smp, 3, bound);
        MatrixZA b3 = random_matrix(f, smp, 3, bound);
        tally(mult, determinant(mat_mul(a3, b3)) == f.mul(determinant(a3), determinant(b3)),
              1.0);
    }
    return {det_rep, size_rep, mult};
}

std::vector<CheckReport> check_lll(const Field& f, uint64_t samples, const Int& bound,
                                   unsigned long seed) {
    ElemSampler smp(f, seed);
    CheckReport red{"verify_reduced"}, uni{"unimodular"}, trans{"transform_consistent"},
        gram{"gram_conserved"}, iters{"iteration_count"}, pot{"potential_decrease"};
    const Delta delta{3, 4};

    for (uint64_t i = 0; i < samples; ++i) {
        size_t n = 2 + static_cast<size_t>(smp.next_int(1).get_si() + 1);  // 2..4
        MatrixZA basis(f, 0, 0);
        LLLState init;
        for (;;) {
            basis = random_matrix(f, smp, n, bound);
            try {
                init = lll_init(basis);
                break;
            } catch (const DependentBasis&) {
            }
        }
        LLLOptions opts;
        opts.delta = delta;
        opts.check_potential = true;
        opts.record_stats = false;
        LLLResult res = lll_reduce(basis, opts);

        tally(red, verify_reduced(res.basis, delta), 1.0);
        tally(uni, abs_int(int_matrix_det(res.transform)) == 1, 1.0);

        bool tok = true;
        for (size_t r = 0; r < n && tok; ++r)
            for (size_t j = 0; j < n && tok; ++j) {
                Elem s = f.zero();
                for (size_t t = 0; t < n; ++t)
                    s = f.add(s, f.scalar_mul(res.transform[r][t], basis.at(t, j)));
                tok = s == res.basis.at(r, j);
            }
        tally(trans, tok, 1.0);

        LLLState fin = lll_init(res.basis);
        tally(gram, fin.d[n] == init.d[n], 1.0);
        tally(iters, res.stats.iterations == 2 * res.stats.swaps + n - 1, 1.0);
        tally(pot, res.stats.potential_violations == 0, 1.0);
    }
    return {red, uni, trans, gram, iters, pot};
}

std::vector<CheckReport> run_suite(const Field& f, const std::string& suite,
                                   uint64_t samples, unsigned long seed) {
    if (suite == "growth") return check_growth_bounds(f, samples, pow_int(Int(2), 64), seed);
    if (suite == "order") return check_order(f, samples, pow_int(Int(2), 32), seed);
    if (suite == "inverse") return check_inverse(f, samples, pow_int(Int(2), 32), seed);
    if (suite == "bareiss") return check_bareiss(f, samples, Int(10), seed);
    if (suite == "lll") return check_lll(f, samples, Int(64), seed);
    throw ParseError("unknown suite '" + suite + "' (expected growth|order|inverse|bareiss|lll)");
}

std::string report_csv(const std::vector<CheckReport>& reports) {
    std::string out = "check,samples,failures,worst_ratio\n";
    char buf[64];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof(buf), "%.6g", r.worst_ratio);
        out += r.check + "," + std::to_string(r.samples) + "," + std::to_string(r.failures) +
               "," + buf + "\n";
    }
    return out;
}

}  // namespace zalpha
