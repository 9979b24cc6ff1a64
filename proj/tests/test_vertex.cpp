#include <doctest.h>

#include <random>
#include <thread>

#include "schurw/labels.hpp"
#include "schurw/vertex.hpp"

using namespace schurw;

namespace {

Poly t(int n) { return Poly::var(n); }

// Independent oracle for the multiplication half of B(z): expand
// exp(sum_m (1-rho^m) t_m z^m) by direct series multiplication of the
// exponential, one z-power at a time. Deliberately not the recurrence
// used by the implementation.
std::vector<Poly> exp_oracle(const Rational& rho, int zmax) {
    std::vector<Poly> coeffs(zmax + 1);
    coeffs[0] = Poly(Rational(1));
    // f = sum a_m t_m z^m truncated at zmax
    std::vector<Poly> f(zmax + 1);
    for (int m = 1; m <= zmax; ++m)
        f[m] = t(m).scale(Rational(1) - rat_pow(rho, m));
    // exp(f) = sum f^j / j!
    std::vector<Poly> power(zmax + 1);  // current f^j by z-degree
    power[0] = Poly(Rational(1));
    Rational fact(1);
    for (int j = 1; j <= zmax; ++j) {
        std::vector<Poly> next(zmax + 1);
        for (int d = 0; d <= zmax; ++d)
            for (int m = 1; m + d <= zmax; ++m)
                if (!power[d].is_zero() && !f[m].is_zero())
                    next[d + m] += power[d] * f[m];
        power = std::move(next);
        fact *= j;
        for (int d = 0; d <= zmax; ++d)
            coeffs[d].add_scaled(power[d], Rational(1) / fact);
    }
    return coeffs;
}

Poly random_odd_poly(std::mt19937& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> num(-3, 3);
    Poly p;
    for (int i = 0; i < terms; ++i) {
        int budget = deg_dist(rng);
        Monomial m;
        while (budget > 0) {
            std::uniform_int_distribution<int> var_dist(1, budget);
            int v = var_dist(rng);
            if (v % 2 == 0) v -= 1;
            if (v < 1) break;
            m = m * Monomial::var(v);
            budget -= v;
        }
        int c = num(rng);
        Poly term;
        term.insert_term(m, rat(c == 0 ? 2 : c));
        p += term;
    }
    return p;
}

// Slow straightening driven directly by B_m B_n = -B_{n-1} B_{m+1};
// test oracle for the staircase rule.
LinComb slow_straighten_schur(IntVector lam) {
    LinComb out(Basis::Schur);
    // work on one word at a time; the relation preserves single-term form
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
            if (lam[i] + 1 == lam[i + 1]) return out;  // B_a B_{a+1} = 0
            if (lam[i] < lam[i + 1]) {
                int m = lam[i], n = lam[i + 1];
                lam[i] = n - 1;
                lam[i + 1] = m + 1;
                sign = -sign;
                changed = true;
            }
        }
    }
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (!lam.empty() && lam.back() < 0) return out;
    out.add(lam, Rational(sign));
    return out;
}

}  // namespace

TEST_CASE("B_n on constants matches the exponential series oracle") {
    for (const Rational& rho : {rat(0), rat(-1), rat(1, 2)}) {
        auto oracle = exp_oracle(rho, 8);
        RhoParam rp(rho);
        for (int n = 0; n <= 8; ++n)
            CHECK(apply_B(n, Poly(Rational(1)), rp) == oracle[n]);
    }
}

TEST_CASE("vacuum spot values") {
    Poly one(Rational(1));
    CHECK(apply_B(0, one, RhoParam(rat(2, 7))) == one);
    for (int n = -3; n < 0; ++n) {
        CHECK(apply_B(n, one, rho_schur()) == Poly());
        CHECK(apply_Bstar(-n, one, rho_q()) == Poly());
    }
    CHECK(apply_Bstar(0, one, rho_schur()) == one);
    // frozen expansions
    CHECK(apply_B(1, one, rho_q()) == t(1).scale(rat(2)));
    Poly q3 = t(3).scale(rat(2)) + t(1).mul_var(1).mul_var(1).scale(rat(4, 3));
    CHECK(apply_B(3, one, rho_q()) == q3);
    // B*_{-2} . 1 at rho = 0 is t1^2/2 - t2
    Poly s11 = t(1).mul_var(1).scale(rat(1, 2)) - t(2);
    CHECK(apply_Bstar(-2, one, rho_schur()) == s11);
    CHECK(apply_Bstar(-1, one, rho_q()) == t(1).scale(rat(-2)));
}

TEST_CASE("hall_littlewood basics") {
    CHECK(hall_littlewood({}, RhoParam(rat(1, 3))) == Poly(Rational(1)));
    Poly q21 = t(1).mul_var(1).mul_var(1).scale(rat(4, 3)) - t(3).scale(rat(4));
    CHECK(qfun({2, 1}) == q21);
    Poly s2 = t(2) + t(1).mul_var(1).scale(rat(1, 2));
    CHECK(schur({2}) == s2);
    // trailing zeros drop, negative tails vanish
    CHECK(schur({2, 0}) == schur({2}));
    CHECK(qfun({3, -1}) == Poly());
}

TEST_CASE("homogeneity and odd support") {
    for (const auto& lam :
         {IntVector{3}, IntVector{2, 1}, IntVector{4, 2}, IntVector{1, 2, 3}}) {
        Poly q = qfun(lam);
        CHECK(q.odd_support_only());
        if (!q.is_zero()) {
            CHECK(q.is_homogeneous());
            CHECK(q.degree() == weight(lam));
        }
        Poly s = schur(lam);
        if (!s.is_zero()) {
            CHECK(s.is_homogeneous());
            CHECK(s.degree() == weight(lam));
        }
    }
}

TEST_CASE("straighten_schur spot values") {
    CHECK(straighten_schur({1, 2}).is_zero());
    LinComb r = straighten_schur({2, 0});
    CHECK(r.terms.size() == 1);
    CHECK(r.terms.at({2}) == 1);
    LinComb r2 = straighten_schur({1, 3});
    CHECK(r2.terms.size() == 1);
    CHECK(r2.terms.at({2, 2}) == -1);
}

TEST_CASE("straighten_schur agrees with the slow rewriter") {
    for (int a = -3; a <= 4; ++a)
        for (int b = -3; b <= 4; ++b) {
            CHECK(straighten_schur({a, b}) == slow_straighten_schur({a, b}));
            for (int c = -2; c <= 4; ++c)
                CHECK(straighten_schur({a, b, c}) ==
                      slow_straighten_schur({a, b, c}));
        }
}

TEST_CASE("straighten_q spot values") {
    CHECK(straighten_q({1, 1}).is_zero());
    LinComb r = straighten_q({1, 2});
    CHECK(r.terms.size() == 1);
    CHECK(r.terms.at({2, 1}) == -1);
    LinComb r2 = straighten_q({-1, 1});
    CHECK(r2.terms.size() == 1);
    CHECK(r2.terms.at({}) == -2);
}

TEST_CASE("straightening soundness on short labels") {
    for (int a = -2; a <= 4; ++a) {
        CHECK(schur({a}) == straighten_schur({a}).to_poly());
        CHECK(qfun({a}) == straighten_q({a}).to_poly());
        for (int b = -2; b <= 4; ++b) {
            CHECK(schur({a, b}) == straighten_schur({a, b}).to_poly());
            CHECK(qfun({a, b}) == straighten_q({a, b}).to_poly());
            for (int c = -2; c <= 4; ++c) {
                CHECK(schur({a, b, c}) ==
                      straighten_schur({a, b, c}).to_poly());
                CHECK(qfun({a, b, c}) == straighten_q({a, b, c}).to_poly());
            }
        }
    }
}

TEST_CASE("exchange relations at general rho") {
    std::mt19937 rng(5);
    for (const Rational& rho :
         {rat(0), rat(-1), rat(1, 2), rat(-1, 3)}) {
        RhoParam rp(rho);
        Poly p = random_odd_poly(rng, 5, 3) + Poly::var(2);
        for (int m = -2; m <= 2; ++m)
            for (int n = -2; n <= 2; ++n) {
                Poly lhs = apply_B(m, apply_B(n, p, rp), rp);
                lhs.add_scaled(apply_B(n, apply_B(m, p, rp), rp), -rho);
                Poly rhs =
                    apply_B(m + 1, apply_B(n - 1, p, rp), rp).scale(rho);
                rhs -= apply_B(n - 1, apply_B(m + 1, p, rp), rp);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("hatted duality") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        Poly p = random_odd_poly(rng, 7, 4);
        for (int n = -4; n <= 4; ++n) {
            Poly lhs = apply_Bstar(n, p, rho_q());
            Poly rhs = apply_B(-n, p, rho_q()).scale(rat(parity_sign(n)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("q_inner") {
    CHECK(q_inner(qfun({1}), qfun({1})) == 2);
    CHECK(q_inner(qfun({2, 1}), qfun({3})) == 0);
    CHECK(q_inner(Poly(Rational(1)), Poly(Rational(1))) == 1);
    CHECK_THROWS_AS(q_inner(Poly::var(2), Poly::var(2)), std::domain_error);
    // orthogonality 2^l delta on strict partitions up to weight 7
    for (const auto& lam : strict_partitions_up_to(7))
        for (const auto& mu : strict_partitions_up_to(7)) {
            Rational expected =
                lam == mu
                    ? rat_pow(rat(2), static_cast<long>(lam.size()))
                    : Rational(0);
            CHECK(q_inner(qfun(lam), qfun(mu)) == expected);
        }
}

TEST_CASE("hall_inner orthonormality") {
    for (const auto& lam : partitions_up_to(6))
        for (const auto& mu : partitions_up_to(6)) {
            Rational expected = lam == mu ? Rational(1) : Rational(0);
            CHECK(hall_inner(schur(lam), schur(mu)) == expected);
        }
}

TEST_CASE("expand_in_basis") {
    LinComb e = expand_in_basis(t(1).scale(rat(2)), Basis::Q);
    CHECK(e.terms.size() == 1);
    CHECK(e.terms.at({1}) == 1);
    LinComb e2 = expand_in_basis(qfun({1, 2}), Basis::Q);
    CHECK(e2 == straighten_q({1, 2}));
    CHECK(expand_in_basis(Poly(), Basis::Q).is_zero());
    CHECK(expand_in_basis(Poly(), Basis::Schur).is_zero());
}

TEST_CASE("expand_in_basis round trip") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> part(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        LinComb lc(trial % 2 ? Basis::Q : Basis::Schur);
        for (int j = 0; j < 3; ++j) {
            IntVector lam;
            int prev = 7;
            for (int i = 0; i < 2; ++i) {
                int v = part(rng);
                if (v >= prev) v = prev - 1;
                if (v < 1) break;
                lam.push_back(v);
                prev = v;
            }
            std::uniform_int_distribution<int> num(-3, 3);
            int c = num(rng);
            lc.add(lam, rat(c == 0 ? 1 : c));
        }
        CHECK(expand_in_basis(lc.to_poly(), lc.basis) == lc);
    }
}

TEST_CASE("rho = 1 is rejected") {
    CHECK_THROWS_AS(RhoParam(rat(1)), std::invalid_argument);
}

TEST_CASE("concurrent use of the shared caches") {
    auto labels = strict_partitions_up_to(7);
    std::vector<Poly> serial;
    for (const auto& lam : labels) serial.push_back(qfun(lam));
    std::vector<int> bad(4, 0);
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (int round = 0; round < 3; ++round)
                for (std::size_t i = 0; i < labels.size(); ++i) {
                    if (qfun(labels[i]) != serial[i]) ++bad[w];
                    Poly b = apply_B(static_cast<int>(w), serial[i], rho_q());
                    if (!b.odd_support_only()) ++bad[w];
                }
        });
    for (auto& t : workers) t.join();
    for (int w = 0; w < 4; ++w) CHECK(bad[w] == 0);
}
