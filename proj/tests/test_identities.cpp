#include <doctest.h>

#include <random>

#include "schurw/identities.hpp"
#include "schurw/labels.hpp"
#include "schurw/tau.hpp"
#include "schurw/wops.hpp"

using namespace schurw;

TEST_CASE("apply_D") {
    CHECK(apply_D({{{0, 1}}}, {6, 2}) == rat(4, 45));
    CHECK(apply_D({{{1, 1}}}, {4, 2}) == 0);
    CHECK(apply_D({{{0, 3}}}, {6, 2}) == 0);
    CHECK_THROWS_AS(apply_D({{{0, 1}}}, {1, 2}), std::domain_error);
    CHECK_THROWS_AS(apply_D({{{3, 1}}}, {4, 2}), std::invalid_argument);
    // mixed word order: D_0^2 D_1 A_(8,4) divides by 3, then 7, then 5
    Rational direct = A_coeff({4, 2}) / rat(3 * 7 * 5);
    direct.canonicalize();
    CHECK(apply_D({{{0, 2}, {1, 1}}}, {8, 4}) == direct);
}

TEST_CASE("phi vanishes") {
    CHECK(phi({2, 1}) == 0);
    CHECK(phi({3, 2, 1, 0}) == 0);
    CHECK(phi({1, 0}) == 0);
    for (int a = 1; a <= 6; ++a)
        for (int b = 0; b < a; ++b) CHECK(phi({a, b}) == 0);
    CHECK(phi({5, 3, 2, 0}) == 0);
    CHECK(phi({6, 4, 2, 1}) == 0);
}

TEST_CASE("gamma and psi vanish on strict descending vectors") {
    CHECK(gamma_sum({3, 2, 1, 0}) == 0);
    CHECK(gamma_sum({4, 3, 2, 1}) == 0);
    CHECK(gamma_sum({5, 4, 3, 2, 1, 0}) == 0);
    CHECK(psi_sum({3, 2, 1, 0}) == 0);
    CHECK(psi_sum({4, 3, 2, 0}) == 0);
    CHECK(psi_sum({5, 4, 2, 1}) == 0);
    CHECK_THROWS_AS(gamma_sum({1, 2}), std::invalid_argument);
}

TEST_CASE("DA vanishing on doubled (3m+2, 3n+2)") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            CHECK(DA({2 * (3 * m + 2), 2 * (3 * n + 2)}) == 0);
}

TEST_CASE("D expansion displays") {
    for (const IntVector& nu :
         {IntVector{4, 3, 2, 1}, IntVector{5, 3, 2, 0}, IntVector{6, 5, 3, 2},
          IntVector{8, 6, 4, 1}}) {
        auto [l1, r1] = dexp_last(nu);
        CHECK(l1 == r1);
        auto [l2, r2] = dexp_last2(nu);
        CHECK(l2 == r2);
        if (nu.back() >= 1) {
            auto [l3, r3] = dexp_symmetric(nu);
            CHECK(l3 == r3);
        }
        if (nu.back() >= 2) {
            auto [l4, r4] = dexp_symmetric2(nu);
            CHECK(l4 == r4);
        }
    }
}

TEST_CASE("hook strip lemma") {
    for (const IntVector& lam : {IntVector{}, IntVector{2}, IntVector{3, 1}}) {
        CHECK(check_hook_lemma(lam, -2, 2).equal);
        CHECK(check_hook_lemma(lam, 0, 0).equal);
        auto v = check_hook_lemma(lam, -1, 2);
        CHECK(v.equal);
        CHECK(v.lhs.is_zero());
    }
    CHECK_THROWS_AS(check_hook_lemma({}, 1, 0), std::invalid_argument);
}

TEST_CASE("B* on Schur closed form") {
    LinComb r = bstar_on_schur_closed(0, {});
    CHECK(r.terms.size() == 1);
    CHECK(r.terms.at({}) == 1);
    LinComb r2 = bstar_on_schur_closed(-2, {});
    CHECK(r2.terms.size() == 1);
    CHECK(r2.terms.at({1, 1}) == 1);
    LinComb r3 = bstar_on_schur_closed(2, {2});
    CHECK(r3.terms.size() == 1);
    CHECK(r3.terms.at({}) == 1);
    for (const IntVector& lam :
         {IntVector{}, IntVector{1}, IntVector{3, 1}, IntVector{2, 2, 1}})
        for (int n = -4; n <= 4; ++n)
            CHECK(bstar_on_schur_closed(n, lam).to_poly() ==
                  apply_Bstar(n, schur(lam), rho_schur()));
}

TEST_CASE("wkw_perp closed display") {
    for (const auto& mu : strict_partitions_up_to(6))
        CHECK(wkw_perp_closed(mu).to_poly() ==
              apply_named({NamedKind::WKWperp, 0}, qfun(mu)));
}

TEST_CASE("adjointness of the KW pair") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-3, 3);
    auto random_odd = [&](int max_deg, int terms) {
        std::uniform_int_distribution<int> deg_dist(0, max_deg);
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
            term.insert_term(m, rat(c == 0 ? 1 : c));
            p += term;
        }
        return p;
    };
    for (const auto& mu : strict_partitions_up_to(5)) {
        Poly qmu = qfun(mu);
        for (int trial = 0; trial < 3; ++trial) {
            Poly f = random_odd(9, 4);
            CHECK(q_inner(apply_named({NamedKind::WKWperp, 0}, qmu), f) ==
                  q_inner(qmu, apply_named({NamedKind::WKW, 0}, f)));
        }
    }
}
