#include <doctest.h>

#include "helpers.hpp"
#include "zalpha/oracles.hpp"

using namespace zt;

TEST_CASE("multiplication reduces powers of alpha") {
    const Field& q = sqrt2();
    // (1 + alpha)^2 = 3 + 2 alpha
    Elem b = E(q, {1, 1});
    CHECK(q.mul(b, b) == E(q, {3, 2}));

    const Field& p = plastic();
    // alpha^2 * alpha^2 = alpha^4 = alpha^2 + alpha
    Elem a2 = E(p, {0, 0, 1});
    CHECK(p.mul(a2, a2) == E(p, {0, 1, 1}));
}

TEST_CASE("add/sub/neg/scalar") {
    const Field& f = sqrt2();
    Elem a = E(f, {3, -2}), b = E(f, {-1, 5});
    CHECK(f.add(a, b) == E(f, {2, 3}));
    CHECK(f.sub(a, b) == E(f, {4, -7}));
    CHECK(f.neg(a) == E(f, {-3, 2}));
    CHECK(f.scalar_mul(Int(-3), a) == E(f, {-9, 6}));
}

TEST_CASE("inverse in Q(sqrt2)") {
    const Field& f = sqrt2();

    // 1/(1+alpha): (1+alpha)(1-alpha) = -1, normalized den > 0
    InverseRep r = f.inverse(E(f, {1, 1}));
    CHECK(r.num == E(f, {-1, 1}));
    CHECK(r.den == 1);
    CHECK(f.mul(E(f, {1, 1}), r.num) == f.from_int(r.den));

    // 1/alpha = alpha/2
    r = f.inverse(f.alpha());
    CHECK(r.num == f.alpha());
    CHECK(r.den == 2);

    CHECK_THROWS_AS(f.inverse(f.zero()), DivisionByZero);
}

TEST_CASE("inverse of a rational integer") {
    const Field& f = plastic();
    InverseRep r = f.inverse(f.from_int(-6));
    // 1/-6: num/den with b*num = den, den > 0
    CHECK(f.mul(f.from_int(-6), r.num) == f.from_int(r.den));
    CHECK(r.den > 0);
    CHECK(f.is_rational_integer(r.num));
}

TEST_CASE("inverse records a subresultant trace") {
    const Field& f = deg5();
    SubresultantTrace tr;
    InverseRep r = f.inverse(E(f, {3, -1, 4, 1, -5}), &tr);
    CHECK(f.mul(E(f, {3, -1, 4, 1, -5}), r.num) == f.from_int(r.den));
    REQUIRE(tr.degree_sequence.size() >= 2);
    CHECK(tr.degree_sequence.front() == 5);
    // degrees strictly decrease after the first two entries
    for (size_t i = 2; i < tr.degree_sequence.size(); ++i)
        CHECK(tr.degree_sequence[i] < tr.degree_sequence[i - 1]);
}

TEST_CASE("norm") {
    const Field& f = sqrt2();
    CHECK(f.norm(f.alpha()) == -2);          // sqrt2 * (-sqrt2)
    CHECK(f.norm(E(f, {1, 1})) == -1);       // (1+sqrt2)(1-sqrt2)
    CHECK(f.norm(f.zero()) == 0);
    CHECK(f.norm(f.from_int(3)) == 9);       // s^m
    // multiplicativity
    Elem a = E(f, {2, -3}), b = E(f, {-4, 1});
    CHECK(f.norm(f.mul(a, b)) == f.norm(a) * f.norm(b));
}

TEST_CASE("exact division") {
    const Field& f = sqrt2();
    CHECK(f.exact_div(E(f, {3, 2}), E(f, {1, 1})) == E(f, {1, 1}));
    CHECK(f.exact_div(f.from_int(-1), E(f, {1, 1})) == E(f, {1, -1}));
    CHECK_THROWS_AS(f.exact_div(f.alpha(), f.from_int(2)), InexactDivision);
    CHECK_THROWS_AS(f.exact_div(f.one(), f.zero()), DivisionByZero);
}

TEST_CASE("characteristic polynomial") {
    const Field& f = sqrt2();
    // b = 1 + alpha: h = x^2 - 2x - 1
    CHECK(f.char_poly(E(f, {1, 1})) == std::vector<Int>{Int(-1), Int(-2)});
    // b = 0: h = x^m
    CHECK(f.char_poly(f.zero()) == std::vector<Int>{Int(0), Int(0)});
    // b = alpha: h = f
    CHECK(f.char_poly(f.alpha()) == f.min_poly());

    const Field& p = plastic();
    CHECK(p.char_poly(p.alpha()) == p.min_poly());
    // constant b = s: h = (x - s)^m
    CHECK(p.char_poly(p.from_int(2)) == std::vector<Int>{Int(-8), Int(12), Int(-6)});
}

TEST_CASE("zero divisors under a reducible minimal polynomial") {
    // f = x^2 - 4 = (x-2)(x+2), squarefree but reducible; alpha = 2
    Field f({Int(-4), Int(0)}, Rat(1), Rat(3));
    // alpha - 2 represents the real number 0 but is a nonzero vector
    Elem z = E(f, {-2, 1});
    CHECK(!f.is_zero(z));
    CHECK(f.sign(z) == 0);  // exact rational root detected
    CHECK_THROWS_AS(f.inverse(z), ZeroDivisor);
}

TEST_CASE("ring axioms on random elements") {
    const Field& f = plastic();
    ElemSampler smp(f, 99ul);
    const Int bound = pow_int(Int(2), 64);
    for (int i = 0; i < 200; ++i) {
        Elem a = smp.next(bound), b = smp.next(bound), c = smp.next(bound);
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == f.zero());
        CHECK(f.mul(a, f.one()) == a);
    }
}

TEST_CASE("growth bounds hold with the stored constants") {
    for (const Field* fp : {&sqrt2(), &cbrt2(), &deg5()}) {
        const Field& f = *fp;
        auto reports = check_growth_bounds(f, 200, pow_int(Int(2), 64), 5ul);
        for (const auto& r : reports) {
            INFO(r.check);
            CHECK(r.failures == 0);
            CHECK(r.worst_ratio <= 1.0);
        }
    }
}
