// Acceptance harness: nine property-based criteria with exact oracles.
// One PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zalpha/io.hpp"
#include "zalpha/lll.hpp"
#include "zalpha/oracles.hpp"

using namespace zalpha;

namespace {

struct NamedField {
    std::string name;
    const Field* field;
};

std::vector<NamedField> acceptance_fields() {
    static Field f2({Int(-2), Int(0)}, Rat(1), Rat(2));
    static Field f3a({Int(-2), Int(0), Int(0)}, Rat(1), Rat(2));
    static Field f3b({Int(-1), Int(-1), Int(0)}, Rat(1), Rat(2));
    static Field f5({Int(-1), Int(-1), Int(0), Int(0), Int(0)}, Rat(1), Rat(2));
    return {{"x^2-2", &f2}, {"x^3-2", &f3a}, {"x^3-x-1", &f3b}, {"x^5-x-1", &f5}};
}

int g_failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail,
            double seconds) {
    std::printf("%s criterion %d: %s (%s, %.1fs)\n", ok ? "PASS" : "FAIL", idx, what,
                detail.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void run(int idx, const char* what, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, what, ok, detail, secs);
}

uint64_t sum_failures(const std::vector<CheckReport>& reports, uint64_t& samples) {
    uint64_t f = 0;
    for (const auto& r : reports) {
        f += r.failures;
        samples += r.samples;
    }
    return f;
}

// Textbook LLL over the rationals (classic mu_ij Gram-Schmidt with mpq),
// written independently of the integral main path; m = 1 reference.
std::vector<std::vector<Int>> textbook_int_lll(std::vector<std::vector<Int>> b,
                                               const Rat& delta) {
    const size_t n = b.size();
    auto dot = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        Rat s(0);
        for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    auto doti = [&](const std::vector<Int>& x, const std::vector<Rat>& y) {
        Rat s(0);
        for (size_t i = 0; i < x.size(); ++i) s += Rat(x[i]) * y[i];
        return s;
    };

    std::vector<std::vector<Rat>> gs(n);
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> B(n);

    auto gso = [&]() {
        for (size_t i = 0; i < n; ++i) {
            gs[i].assign(b[i].size(), Rat(0));
            for (size_t t = 0; t < b[i].size(); ++t) gs[i][t] = Rat(b[i][t]);
            for (size_t j = 0; j < i; ++j) {
                mu[i][j] = doti(b[i], gs[j]) / B[j];
                for (size_t t = 0; t < gs[i].size(); ++t)
                    gs[i][t] -= mu[i][j] * gs[j][t];
            }
            B[i] = dot(gs[i], gs[i]);
        }
    };
    auto round_half_up = [](const Rat& x) {
        Rat t = x + Rat(1, 2);
        return fdiv(t.get_num(), t.get_den());
    };

    gso();
    size_t k = 1;
    while (k < n) {
        // size-reduce against k-1
        Int c = round_half_up(mu[k][k - 1]);
        if (c != 0)
            for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= c * b[k - 1][t];
        gso();
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            std::swap(b[k], b[k - 1]);
            gso();
            k = k > 1 ? k - 1 : 1;
        } else {
            for (size_t l = k - 1; l-- > 0;) {
                Int cl = round_half_up(mu[k][l]);
                if (cl != 0)
                    for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= cl * b[l][t];
                gso();
            }
            ++k;
        }
    }
    return b;
}

}  // namespace

int main() {
    auto fields = acceptance_fields();

    run(1, "growth bounds (Eqs. 5-9, 16/17), 10^4 pairs per field", [&](std::string& d) {
        uint64_t samples = 0, fails = 0;
        for (const auto& nf : fields)
            fails += sum_failures(
                check_growth_bounds(*nf.field, 10000, pow_int(Int(2), 64), 1001ul), samples);
        d = std::to_string(samples) + " checks, " + std::to_string(fails) + " failures";
        return fails == 0;
    });

    run(2, "inverse correctness vs characteristic-polynomial oracle, 10^3 per field",
        [&](std::string& d) {
            uint64_t samples = 0, fails = 0;
            for (const auto& nf : fields)
                fails += sum_failures(
                    check_inverse(*nf.field, 1000, pow_int(Int(2), 32), 1002ul), samples);
            d = std::to_string(samples) + " checks, " + std::to_string(fails) + " failures";
            return fails == 0;
        });

    run(3, "certified sign/cmp vs 256-bit oracle + rounding contracts, 10^4 per field",
        [&](std::string& d) {
            uint64_t samples = 0, fails = 0;
            for (const auto& nf : fields)
                fails += sum_failures(
                    check_order(*nf.field, 10000, pow_int(Int(2), 32), 1003ul), samples);
            d = std::to_string(samples) + " checks, " + std::to_string(fails) + " failures";
            return fails == 0;
        });

    run(4, "direct worst-case-ceiling answers match progressive refinement, 10^2",
        [&](std::string& d) {
            uint64_t fails = 0, samples = 0;
            for (const auto& nf : fields) {
                if (nf.field->degree() > 3) continue;  // tractability cap
                const Field& f = *nf.field;
                ElemSampler smp(f, 1004ul);
                const Int bound = pow_int(Int(2), 16);
                for (int i = 0; i < 100; ++i) {
                    Elem a = smp.next(bound);
                    Int s = smp.next_nonzero_int(bound);
                    ++samples;
                    if (f.sign(a, RefinePolicy::Progressive) !=
                        f.sign(a, RefinePolicy::DirectCeiling))
                        ++fails;
                    if (f.floor_div_int(a, s, RefinePolicy::Progressive) !=
                        f.floor_div_int(a, s, RefinePolicy::DirectCeiling))
                        ++fails;
                    if (f.ceil_div_int(a, s, RefinePolicy::Progressive) !=
                        f.ceil_div_int(a, s, RefinePolicy::DirectCeiling))
                        ++fails;
                    if (f.round_div_int(a, s, RefinePolicy::Progressive) !=
                        f.round_div_int(a, s, RefinePolicy::DirectCeiling))
                        ++fails;
                }
            }
            d = std::to_string(samples) + " samples, " + std::to_string(fails) + " mismatches";
            return fails == 0;
        });

    run(5, "Bareiss determinant vs cofactor oracle + size bound, 10^2 per field",
        [&](std::string& d) {
            uint64_t samples = 0, fails = 0;
            for (const auto& nf : fields) {
                const Field& f = *nf.field;
                ElemSampler smp(f, 1005ul);
                for (int i = 0; i < 100; ++i) {
                    size_t n = 2 + static_cast<size_t>(i % 4);  // 2..5
                    MatrixZA m(f, n, n);
                    Int c = 1;
                    for (auto& e : m.data) {
                        e = smp.next(Int(10));
                        c = std::max(c, f.opc(e));
                    }
                    ++samples;
                    if (determinant(m) != brute_det(m)) ++fails;
                    Int fact;
                    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
                    Int bound = fact *
                                pow_int(f.const_M(), static_cast<unsigned long>(n - 1)) *
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
                    if (peak > bound) ++fails;
                }
            }
            d = std::to_string(samples) + " matrices, " + std::to_string(fails) + " failures";
            return fails == 0;
        });

    uint64_t potential_violations = 0;
    run(6, "LLL reducedness, unimodularity, Gram conservation, t = 2s+n-1",
        [&](std::string& d) {
            uint64_t fails = 0, bases = 0;
            for (const auto& nf : fields) {
                const Field& f = *nf.field;
                ElemSampler smp(f, 1006ul);
                for (const Delta& delta : {Delta{Int(3), Int(4)}, Delta{Int(9), Int(10)}}) {
                    for (int i = 0; i < 25; ++i) {
                        size_t n = 2 + static_cast<size_t>(i % 4);  // 2..5
                        MatrixZA b(f, n, n);
                        LLLState init;
                        for (;;) {
                            for (auto& e : b.data) e = smp.next(pow_int(Int(2), 16));
                            try {
                                init = lll_init(b);
                                break;
                            } catch (const DependentBasis&) {
                            }
                        }
                        LLLOptions opts;
                        opts.delta = delta;
                        opts.check_potential = true;
                        opts.record_stats = false;
                        LLLResult res = lll_reduce(b, opts);
                        ++bases;
                        potential_violations += res.stats.potential_violations;

                        if (!verify_reduced(res.basis, delta)) ++fails;
                        if (abs_int(int_matrix_det(res.transform)) != 1) ++fails;
                        bool tok = true;
                        for (size_t r = 0; r < n && tok; ++r)
                            for (size_t j = 0; j < n && tok; ++j) {
                                Elem s = f.zero();
                                for (size_t t = 0; t < n; ++t)
                                    s = f.add(s,
                                              f.scalar_mul(res.transform[r][t], b.at(t, j)));
                                tok = s == res.basis.at(r, j);
                            }
                        if (!tok) ++fails;
                        if (!(lll_init(res.basis).d[n] == init.d[n])) ++fails;
                        if (res.stats.iterations != 2 * res.stats.swaps + n - 1) ++fails;
                    }
                }
            }
            d = std::to_string(bases) + " bases, " + std::to_string(fails) + " failures";
            return fails == 0;
        });

    run(7, "potential decreases by factor delta at every swap", [&](std::string& d) {
        d = std::to_string(potential_violations) + " violations across criterion 6 runs";
        return potential_violations == 0;
    });

    run(8, "integer regression vs independent textbook LLL", [&](std::string& d) {
        Field z({Int(-1)}, Rat(0), Rat(2));  // m = 1, alpha = 1
        std::vector<std::vector<Int>> in{{Int(1), Int(1), Int(1)},
                                         {Int(-1), Int(0), Int(2)},
                                         {Int(3), Int(5), Int(6)}};
        MatrixZA b(z, 3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) b.at(i, j) = z.from_int(in[i][j]);
        LLLResult res = lll_reduce(b, {});
        if (!verify_reduced(res.basis, Delta{Int(3), Int(4)})) {
            d = "output not reduced";
            return false;
        }
        if (abs_int(int_matrix_det(res.transform)) != 1) {
            d = "transform not unimodular";
            return false;
        }
        auto ref = textbook_int_lll(in, Rat(3, 4));
        // match up to sign and order of the vectors
        std::vector<bool> used(3, false);
        for (size_t i = 0; i < 3; ++i) {
            bool found = false;
            for (size_t r = 0; r < 3 && !found; ++r) {
                if (used[r]) continue;
                bool plus = true, minus = true;
                for (size_t j = 0; j < 3; ++j) {
                    plus = plus && res.basis.at(i, j).c[0] == ref[r][j];
                    minus = minus && res.basis.at(i, j).c[0] == -ref[r][j];
                }
                if (plus || minus) {
                    used[r] = true;
                    found = true;
                }
            }
            if (!found) {
                d = "row " + std::to_string(i) + " not matched by the reference";
                return false;
            }
        }
        d = "matched reference basis up to sign/order";
        return true;
    });

    run(9, "Minkowski bound d_j >= (L0/j)^j on reduced tiny bases", [&](std::string& d) {
        Field z({Int(-1)}, Rat(0), Rat(2));
        const Field& q = *fields[0].field;  // x^2 - 2
        uint64_t checks = 0, fails = 0;
        for (const Field* fp : std::initializer_list<const Field*>{&z, &q}) {
            const Field& f = *fp;
            ElemSampler smp(f, 1009ul);
            for (int trial = 0; trial < 10; ++trial) {
                size_t n = 2 + static_cast<size_t>(trial % 2);  // 2..3
                MatrixZA b(f, n, n);
                for (;;) {
                    for (auto& e : b.data) e = smp.next(Int(5));
                    try {
                        lll_init(b);
                        break;
                    } catch (const DependentBasis&) {
                    }
                }
                LLLResult res = lll_reduce(b, {});
                ShortestVector sv = shortest_vector_enum(res.basis, 5);
                LLLState st = lll_init(res.basis);
                Elem l0p = f.one();
                for (size_t j = 1; j <= n; ++j) {
                    l0p = f.mul(l0p, sv.norm_sq);
                    Int jj = pow_int(Int(j), static_cast<unsigned long>(j));
                    ++checks;
                    if (f.cmp(f.scalar_mul(jj, st.d[j]), l0p) < 0) ++fails;
                }
            }
        }
        d = std::to_string(checks) + " comparisons, " + std::to_string(fails) + " failures";
        return fails == 0;
    });

    std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return g_failures;
}
