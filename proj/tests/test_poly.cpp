#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schurw/poly.hpp"

using namespace schurw;

namespace {

Poly t(int n) { return Poly::var(n); }

Poly random_poly(std::mt19937& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Poly p;
    for (int i = 0; i < terms; ++i) {
        int budget = deg_dist(rng);
        Monomial m;
        while (budget > 0) {
            std::uniform_int_distribution<int> var_dist(1, budget);
            int v = var_dist(rng);
            m = m * Monomial::var(v);
            budget -= v;
        }
        int c = num(rng);
        Poly term;
        term.insert_term(m, rat(c == 0 ? 1 : c, den(rng)));
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic spot values") {
    CHECK(t(1) + t(1) == t(1).scale(rat(2)));
    CHECK(t(1) * t(1) == t(1).mul_var(1));
    // scale(2 t3 + 4/3 t1^3, 3/2) = 3 t3 + 2 t1^3
    Poly p = t(3).scale(rat(2)) + t(1).mul_var(1).mul_var(1).scale(rat(4, 3));
    Poly expected = t(3).scale(rat(3)) + t(1).mul_var(1).mul_var(1).scale(rat(2));
    CHECK(p.scale(rat(3, 2)) == expected);
}

TEST_CASE("partial derivatives") {
    CHECK(t(1).mul_var(1).partial(1) == t(1).scale(rat(2)));
    CHECK(t(3).partial(1) == Poly());
    Poly p = t(3).scale(rat(2)) + t(1).mul_var(1).mul_var(1).scale(rat(4, 3));
    CHECK(p.partial(3) == Poly(rat(2)));
}

TEST_CASE("mul_var") {
    CHECK(Poly(Rational(1)).mul_var(1) == t(1));
    CHECK(t(1).mul_var(3) == t(3).mul_var(1));
    CHECK(t(1).mul_var(1).mul_var(1) == t(1) * t(1) * t(1));
}

TEST_CASE("evaluate") {
    VarAssignment a;
    a[1] = Rational(1);
    CHECK(t(1).scale(rat(2)).evaluate(a) == rat(2));
    VarAssignment b;
    b[3] = rat(1, 3);
    Poly p = t(3).scale(rat(2)) + t(1).mul_var(1).mul_var(1).scale(rat(4, 3));
    CHECK(p.evaluate(b) == rat(2, 3));
    CHECK(Poly().evaluate(a) == 0);
}

TEST_CASE("homogeneous components") {
    Poly p = t(3).scale(rat(2)) + t(1).mul_var(1).mul_var(1).scale(rat(4, 3));
    CHECK(p.homogeneous_component(3) == p);
    CHECK((Poly(Rational(1)) + t(1)).homogeneous_component(0) ==
          Poly(Rational(1)));
    CHECK(t(1).mul_var(3).homogeneous_component(3) == Poly());
    CHECK(t(1).mul_var(3).degree() == 4);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        Poly a = random_poly(rng, 6, 4);
        Poly b = random_poly(rng, 6, 4);
        Poly c = random_poly(rng, 6, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Poly());
    }
}

TEST_CASE("derivation commutator [d_n, t_n] = 1") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(rng, 6, 4);
        for (int n = 1; n <= 4; ++n) {
            Poly lhs = p.mul_var(n).partial(n) - p.partial(n).mul_var(n);
            CHECK(lhs == p);
        }
    }
}

TEST_CASE("grading") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(rng, 5, 3);
        for (int n = 1; n <= 4; ++n) {
            if (!p.is_zero()) {
                CHECK(p.mul_var(n).degree() == p.degree() + n);
                Poly d = p.partial(n);
                if (!d.is_zero()) CHECK(d.degree() <= p.degree() - n);
            }
        }
        // product of homogeneous components multiplies degrees additively
        Poly h1 = p.homogeneous_component(3);
        Poly h2 = p.homogeneous_component(2);
        if (!h1.is_zero() && !h2.is_zero()) CHECK((h1 * h2).degree() == 5);
    }
}

TEST_CASE("evaluate is a ring morphism") {
    std::mt19937 rng(13);
    VarAssignment a;
    a[1] = rat(2);
    a[2] = rat(-1, 2);
    a[3] = rat(1, 3);
    a[4] = rat(1);
    a[5] = rat(-2, 5);
    a[6] = rat(3);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(rng, 6, 4);
        Poly q = random_poly(rng, 6, 4);
        CHECK((p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a));
        CHECK((p + q).evaluate(a) == p.evaluate(a) + q.evaluate(a));
    }
}

TEST_CASE("canonical form invariants") {
    Poly p = t(2) - t(2);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    // term order is deterministic: t1^3 sorts before t3
    Poly q = t(3) + t(1).mul_var(1).mul_var(1);
    auto it = q.terms().begin();
    CHECK(it->first == (Monomial::var(1, 3)));
    ++it;
    CHECK(it->first == Monomial::var(3));
}
