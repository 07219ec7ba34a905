#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopslice/errors.hpp"
#include "loopslice/laurent.hpp"
#include "loopslice/multipoly.hpp"
#include "loopslice/poly.hpp"

using namespace loopslice;

namespace {

long rnd(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Poly random_poly(std::mt19937_64& rng, int maxdeg) {
    const int d = static_cast<int>(rnd(rng, 0, maxdeg));
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(rnd(rng, -5, 5), rnd(rng, 1, 3));
    return Poly(std::move(c));
}

Poly random_nonzero_poly(std::mt19937_64& rng, int maxdeg) {
    while (true) {
        Poly p = random_poly(rng, maxdeg);
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2).den() > 0);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational(1, 0), precondition_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), precondition_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), precondition_error);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("poly divmod worked examples") {
    const Poly f({Rational(-1), Rational(1)});                 // x - 1
    const Poly g({Rational(1), Rational(-3), Rational(1)});    // x^2 - 3x + 1
    auto [q, r] = poly_divmod(g, f);
    CHECK(q == Poly({Rational(-2), Rational(1)}));
    CHECK(r == Poly(Rational(-1)));

    auto [q2, r2] = poly_divmod(g, g);
    CHECK(q2 == Poly(Rational(1)));
    CHECK(r2.is_zero());

    const Poly cubic({Rational(1), Rational(0), Rational(0), Rational(1)}); // x^3 + 1
    const Poly sq = Poly::from_roots({Rational(1), Rational(1)});           // (x-1)^2
    auto [q3, r3] = poly_divmod(cubic, sq);
    CHECK(q3 == Poly({Rational(2), Rational(1)}));
    CHECK(r3 == Poly({Rational(-1), Rational(3)}));

    CHECK_THROWS_AS(poly_divmod(g, Poly()), precondition_error);
}

TEST_CASE("poly divmod round trip property") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const Poly g = random_poly(rng, 12);
        const Poly f = random_nonzero_poly(rng, 12);
        auto [q, r] = poly_divmod(g, f);
        CHECK(q * f + r == g);
        CHECK(r.degree() < f.degree());
    }
}

TEST_CASE("resultant worked examples") {
    const Poly f({Rational(-1), Rational(1)});
    const Poly g({Rational(1), Rational(-3), Rational(1)});
    CHECK(resultant(f, g) == Rational(-1));
    CHECK(resultant(f, Poly::from_roots({Rational(1), Rational(2)})) == Rational(0));
    CHECK(resultant(Poly::monomial(2, Rational(1)), Poly({Rational(3), Rational(1)})) ==
          Rational(9));
    CHECK_THROWS_AS(resultant(Poly(), f), precondition_error);
}

TEST_CASE("resultant vanishes iff gcd is nonconstant") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Poly f = random_nonzero_poly(rng, 6);
        Poly g = random_nonzero_poly(rng, 6);
        if (t % 2 == 0) {
            // Plant a common factor.
            const Poly shared({Rational(rnd(rng, -3, 3)), Rational(1)});
            f = f * shared;
            g = g * shared;
        }
        if (f.degree() == 0 || g.degree() == 0) continue;
        const bool res_zero = resultant(f, g).is_zero();
        const bool gcd_nonconst = poly_gcd(f, g).degree() >= 1;
        CHECK(res_zero == gcd_nonconst);
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(Poly({Rational(1), Rational(-3), Rational(1)})) == Rational(5));
    CHECK(discriminant(Poly::from_roots({Rational(1), Rational(1)})) == Rational(0));
    CHECK(discriminant(Poly({Rational(1), Rational(0), Rational(1)})) == Rational(-4));
    CHECK_THROWS_AS(discriminant(Poly(Rational(3))), precondition_error);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const Poly f = random_nonzero_poly(rng, 8);
        if (f.degree() < 1) continue;
        const bool disc_zero = discriminant(f).is_zero();
        const bool repeated = f.degree() >= 1 && !f.derivative().is_zero() &&
                              poly_gcd(f, f.derivative()).degree() >= 1;
        CHECK(disc_zero == repeated);
    }
}

TEST_CASE("rational roots") {
    const Poly p = Poly::from_roots({Rational(1, 2), Rational(-3), Rational(-3)});
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-3));
    CHECK(roots[1] == Rational(-3));
    CHECK(roots[2] == Rational(1, 2));
    // x^2 + 1 has no rational roots.
    CHECK(rational_roots(Poly({Rational(1), Rational(0), Rational(1)})).empty());
}

TEST_CASE("laurent worked examples") {
    // residue(t^-1 + 3 + t) = 1
    const Laurent x = Laurent::make(-1, {Rational(1), Rational(3), Rational(1)}, 8);
    CHECK(x.residue() == Rational(1));
    // valuation(t^-2 (1 + t)) = -2
    const Laurent y =
        Laurent::monomial(Rational(1), -2, 8) * Laurent::make(0, {Rational(1), Rational(1)}, 8);
    CHECK(y.valuation() == -2);
    // invert(1 - t) = 1 + t + t^2 + ... to precision
    const Laurent u = Laurent::make(0, {Rational(1), Rational(-1)}, 8);
    const Laurent inv = u.inverse();
    for (long k = 0; k < 8; ++k) CHECK(inv.coeff(k) == Rational(1));
    const Laurent prod = u * inv;
    CHECK(prod.coeff(0) == Rational(1));
    for (long k = 1; k < prod.precision(); ++k) CHECK(prod.coeff(k) == Rational(0));
}

TEST_CASE("laurent precision propagation") {
    const Laurent a = Laurent::make(-2, {Rational(1)}, 5); // t^-2 + O(t^5)
    const Laurent b = Laurent::make(1, {Rational(1)}, 3);  // t + O(t^3)
    // Product precision: min(5 + 1, 3 - 2) = 1.
    CHECK((a * b).precision() == 1);
    CHECK((a * b).valuation() == -1);
    // Addition records the weaker precision.
    CHECK((a + b).precision() == 3);
    // Inverse of a valuation -2 series known mod t^5 is known mod t^9.
    CHECK(a.inverse().precision() == 9);
    CHECK(a.inverse().valuation() == 2);
    // Exact values stay exact through ring operations.
    const Laurent e1 = Laurent::exact(Rational(3), -1);
    const Laurent e2 = Laurent::exact(Rational(1, 2), 2);
    CHECK((e1 * e2).is_exact());
    CHECK((e1 + e2).is_exact());
}

TEST_CASE("laurent errors") {
    CHECK_THROWS_AS(Laurent::zero(6).inverse(), precondition_error);
    CHECK_THROWS_AS(Laurent::zero(6).valuation(), precondition_error);
    const Laurent low = Laurent::make(-3, {Rational(1)}, -1); // t^-3 + O(t^-1)
    CHECK_THROWS_AS(low.residue(), precondition_error);
    CHECK(!low.is_integral()); // visible pole decides integrality

    const Laurent hidden = Laurent::zero(-2);
    CHECK_THROWS_AS(hidden.is_integral(), precondition_error);
    CHECK(Laurent::zero(0).is_integral());
}

TEST_CASE("laurent inverse property") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        const long val = rnd(rng, -3, 3);
        std::vector<Rational> c;
        c.emplace_back(rnd(rng, 1, 4), rnd(rng, 1, 2)); // nonzero lead
        for (int i = 0; i < 5; ++i) c.emplace_back(rnd(rng, -3, 3), rnd(rng, 1, 2));
        const Laurent x = Laurent::make(val, std::move(c), val + 6);
        const Laurent inv = x.inverse();
        const Laurent prod = x * inv;
        REQUIRE(!prod.is_zero());
        CHECK(prod.valuation() == 0);
        CHECK(prod.coeff(0) == Rational(1));
        for (long k = 1; k < prod.precision(); ++k) CHECK(prod.coeff(k) == Rational(0));
    }
}

TEST_CASE("multipoly basics") {
    const std::vector<std::string> vars{"x", "y"};
    const MultiPoly x = MultiPoly::variable(vars, "x");
    const MultiPoly y = MultiPoly::variable(vars, "y");
    const MultiPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.coefficient({2, 0}) == Rational(1));
    CHECK(p.coefficient({1, 1}) == Rational(0));
    CHECK(p.eval({{"x", Rational(3)}, {"y", Rational(2)}}) == Rational(5));
    const auto [lead, c] = p.leading_term();
    CHECK(lead == MultiPoly::Expo{2, 0});
    CHECK(c == Rational(1));
    // Laurent monomials are allowed.
    const MultiPoly qinv = MultiPoly::monomial(vars, {-1, 0}, Rational(1));
    CHECK((qinv * x) == MultiPoly::constant(vars, Rational(1)));
    CHECK(qinv.pow(-2) == MultiPoly::monomial(vars, {2, 0}, Rational(1)));
}

TEST_CASE("multipoly determinant and adjugate") {
    const std::vector<std::string> vars{"a", "b", "c", "d"};
    const auto v = [&](const char* s) { return MultiPoly::variable(vars, s); };
    std::vector<std::vector<MultiPoly>> m{{v("a"), v("b")}, {v("c"), v("d")}};
    CHECK(mp_det(m) == v("a") * v("d") - v("b") * v("c"));
    const auto adj = mp_adjugate(m);
    // m * adj = det * I.
    const MultiPoly det = mp_det(m);
    CHECK(m[0][0] * adj[0][0] + m[0][1] * adj[1][0] == det);
    CHECK(m[0][0] * adj[0][1] + m[0][1] * adj[1][1] == MultiPoly(vars));
}
