#include "zalpha/field.hpp"

namespace zalpha {

std::vector<std::vector<Int>> reduction_table(const std::vector<Int>& f_coeffs) {
    const int m = static_cast<int>(f_coeffs.size());
    if (m < 1) throw NotMonic();
    // r[0][l] = -f_l;  r[k+1][l] = r[k][l-1] - f_l * r[k][m-1]
    std::vector<std::vector<Int>> r;
    if (m == 1) return r;  // products of degree-0 elements never need reduction
    r.assign(static_cast<size_t>(m - 1), std::vector<Int>(static_cast<size_t>(m), Int(0)));
    for (int l = 0; l < m; ++l) r[0][static_cast<size_t>(l)] = -f_coeffs[static_cast<size_t>(l)];
    for (int k = 0; k + 1 < m - 1; ++k) {
        const Int& top = r[static_cast<size_t>(k)][static_cast<size_t>(m - 1)];
        for (int l = 0; l < m; ++l) {
            Int v = -f_coeffs[static_cast<size_t>(l)] * top;
            if (l >= 1) v += r[static_cast<size_t>(k)][static_cast<size_t>(l - 1)];
            r[static_cast<size_t>(k + 1)][static_cast<size_t>(l)] = v;
        }
    }
    return r;
}

Field::Field(std::vector<Int> f_coeffs, Rat lo, Rat hi)
    : m_(static_cast<int>(f_coeffs.size())), f_(std::move(f_coeffs)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (m_ < 1) throw NotMonic();
    lo_.canonicalize();
    hi_.canonicalize();
    if (!(lo_ < hi_)) throw IntervalNotIsolating("interval endpoints must satisfy lo < hi");

    f_full_ = f_;
    f_full_.push_back(1);

    // squarefree: the Sturm chain ends in a constant iff gcd(f, f') = 1
    auto chain = sturm_chain(f_full_);
    if (m_ >= 2 && qpoly_deg(chain.back()) != 0) throw NotSquarefree();

    if (poly_sign_at(f_full_, lo_) == 0 || poly_sign_at(f_full_, hi_) == 0)
        throw IntervalNotIsolating("interval endpoint is a root of f");
    int count = sturm_sign_variations(chain, lo_) - sturm_sign_variations(chain, hi_);
    if (count != 1)
        throw IntervalNotIsolating("interval contains " + std::to_string(count) +
                                   " real roots of f, expected exactly 1");

    rtable_ = reduction_table(f_);

    f_inf_ = 0;
    for (const auto& c : f_)
        if (abs_int(c) > f_inf_) f_inf_ = abs_int(c);

    // Integer ceilings of the paper's field constants, with |alpha|
    // replaced by the root bound 1 + ||f||inf and ||f||_2 by
    // ceil(sqrt(m+1) * ||f||inf) (both only enlarge the bounds).
    const Int root_bound = 1 + f_inf_;
    const unsigned long mu = static_cast<unsigned long>(m_);
    const Int m_int(m_);
    const_M_ = m_int * pow_int(root_bound, mu - 1);
    const_S_ = m_int * pow_int(root_bound, mu - 1);
    Int f2 = ceil_sqrt(Int(m_ + 1) * f_inf_ * f_inf_);
    if (f2 < 1) f2 = 1;
    const_Q_ = ceil_sqrt(pow_int(m_int, mu)) * pow_int(f2, mu - 1);
    const_P_ = m_int * pow_int(f2, mu - 1) * pow_int(const_M_ + ceil_sqrt(m_int), mu - 1);

    cur_lo_ = lo_;
    cur_hi_ = hi_;
}

std::optional<Rat> Field::exact_root() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (have_exact_root_) return exact_root_val_;
    return std::nullopt;
}

Elem Field::from_int(const Int& s) const {
    Elem a = zero();
    a.c[0] = s;
    return a;
}

Elem Field::alpha() const {
    if (m_ == 1) return from_int(-f_[0]);  // f = x + f_0, alpha = -f_0
    Elem a = zero();
    a.c[1] = 1;
    return a;
}

Elem Field::elem(std::vector<Int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != m_) throw FieldMismatch();
    return Elem{std::move(coeffs)};
}

void Field::check(const Elem& a) const {
    if (static_cast<int>(a.c.size()) != m_) throw FieldMismatch();
}

bool Field::is_zero(const Elem& a) const {
    check(a);
    for (const auto& c : a.c)
        if (c != 0) return false;
    return true;
}

bool Field::is_rational_integer(const Elem& a) const {
    check(a);
    for (size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
    return true;
}

Int Field::opc(const Elem& a) const {
    check(a);
    Int r = 0;
    for (const auto& c : a.c)
        if (abs_int(c) > r) r = abs_int(c);
    return r;
}

int Field::sign_f(const Rat& x) const { return poly_sign_at(f_full_, x); }

std::pair<Rat, Rat> Field::refined_interval(const Int& d) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (have_exact_root_) return {exact_root_val_, exact_root_val_};

    Rat lo = cur_lo_, hi = cur_hi_;
    int slo = sign_f(lo);
    Rat width = hi - lo;
    Rat target(1, d);
    target.canonicalize();
    while (width > target) {
        Rat mid = (lo + hi) / 2;
        mid.canonicalize();
        int s = sign_f(mid);
        if (s == 0) {
            have_exact_root_ = true;
            exact_root_val_ = mid;
            cur_lo_ = cur_hi_ = mid;
            return {mid, mid};
        }
        if (s == slo)
            lo = mid;
        else
            hi = mid;
        width = hi - lo;
    }
    cur_lo_ = lo;
    cur_hi_ = hi;
    return {lo, hi};
}

AlphaApprox Field::refine_alpha(const Int& d) const {
    if (d < 1) throw Error("refine_alpha: denominator must be positive");
    auto [lo, hi] = refined_interval(d);
    if (lo == hi) {
        // alpha = lo exactly (rational root of a reducible f, or m = 1)
        Rat t = lo * Rat(d);
        t.canonicalize();
        Int u = rat_floor(t);
        Int v = (t == Rat(u)) ? u : u + 1;
        return {d, u, v};
    }
    // Narrow until both endpoints fall in the same cell [u/d, (u+1)/d).
    // alpha lies strictly inside (lo, hi), so an upper endpoint sitting
    // exactly on a cell boundary belongs to the cell below it.
    auto upper_cell = [&](const Rat& x) {
        Rat t = x * Rat(d);
        t.canonicalize();
        Int fl = rat_floor(t);
        if (Rat(fl) == t) fl -= 1;
        return fl;
    };
    Int nlo = rat_floor(lo * Rat(d));
    Int nhi = upper_cell(hi);
    int slo = sign_f(lo);
    while (nlo != nhi) {
        Rat boundary(nlo + 1, d);
        boundary.canonicalize();
        int s = sign_f(boundary);
        if (s == 0) {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            have_exact_root_ = true;
            exact_root_val_ = boundary;
            cur_lo_ = cur_hi_ = boundary;
            return {d, nlo + 1, nlo + 1};
        }
        if (s == slo)
            lo = boundary;
        else
            hi = boundary;
        nlo = rat_floor(lo * Rat(d));
        nhi = upper_cell(hi);
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!have_exact_root_ && hi - lo < cur_hi_ - cur_lo_) {
            cur_lo_ = lo;
            cur_hi_ = hi;
        }
    }
    // u/d <= lo < alpha < hi < (u+1)/d, so floor(alpha d) = u and
    // ceil(alpha d) = u + 1.
    return {d, nlo, nlo + 1};
}

}  // namespace zalpha
