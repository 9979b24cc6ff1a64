#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurw/labels.hpp"
#include "schurw/poly.hpp"
#include "schurw/rational.hpp"

namespace schurw {

// Hall-Littlewood deformation parameter. rho = 1 degenerates the whole
// operator family and is rejected up front.
struct RhoParam {
    Rational value;
    explicit RhoParam(Rational v) : value(std::move(v)) {
        if (value == 1) throw std::invalid_argument("rho = 1 is not allowed");
    }
    RhoParam(long num, long den = 1) : RhoParam(rat(num, den)) {}
};

inline const RhoParam& rho_schur() {
    static const RhoParam r(0);
    return r;
}
inline const RhoParam& rho_q() {
    static const RhoParam r(-1);
    return r;
}

enum class Basis { Schur, Q };

// Finite formal sum of partition labels (Schur basis: partitions,
// Q basis: strict partitions) with rational coefficients.
struct LinComb {
    Basis basis;
    std::map<IntVector, Rational> terms;

    explicit LinComb(Basis b) : basis(b) {}

    void add(const IntVector& label, const Rational& c);
    LinComb& operator+=(const LinComb& o);
    LinComb& add_scaled(const LinComb& o, const Rational& c);
    LinComb scaled(const Rational& c) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const LinComb& o) const {
        return basis == o.basis && terms == o.terms;
    }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    // Expands into the ambient polynomial ring via the cached character
    // polynomials.
    Poly to_poly() const;
    std::string str() const;
};

// Coefficient of z^r in exp(sign * sum_m (1-rho^m) t_m z^m); results
// are memoized process-wide per (rho, sign).
const Poly& exp_series_coeff(const Rational& rho, bool negated, int r);

// Coefficients of z^{-s} in exp(-sum (1/m) d/dt_m z^{-m}) p (the family
// entering B) and in exp(+sum (1/m) d/dt_m z^{-m}) p (entering B*).
// Index s runs 0..deg p.
std::vector<Poly> lower_family(const Poly& p);
std::vector<Poly> raise_family(const Poly& p);

// Vertex operator modes: B_n is the coefficient of z^n in
// exp(sum (1-rho^m) t_m z^m) exp(-sum (1/m) d/dt_m z^{-m}), and B*_n
// the coefficient of z^{-n} in the sign-flipped product.
Poly apply_B(int n, const Poly& p, const RhoParam& rho);
Poly apply_Bstar(int n, const Poly& p, const RhoParam& rho);

// Shared inner helpers for callers that batch many modes on one input.
Poly apply_B_from_family(int n, const std::vector<Poly>& fam,
                         const Rational& rho);
Poly apply_Bstar_from_family(int n, const std::vector<Poly>& fam,
                             const Rational& rho);

// H_lambda(t; rho) = B_{lambda_1} ... B_{lambda_l} . 1
Poly hall_littlewood(const IntVector& lambda, const RhoParam& rho);
// Cached rho = 0 / rho = -1 specializations.
const Poly& schur(const IntVector& lambda);
const Poly& qfun(const IntVector& lambda);
Poly basis_poly(Basis basis, const IntVector& lambda);

// Rewrites S_lambda for an arbitrary integer label as a signed Schur
// partition term (at most one; staircase rule).
LinComb straighten_schur(const IntVector& lambda);
// Expands Q_lambda over strict partitions via the rho = -1 exchange
// relation B_m B_n = -B_n B_m + 2(-1)^m delta_{m,-n}.
LinComb straighten_q(const IntVector& lambda);

// Q-side inner product: substitute t_m -> (1/(2m)) d/dt_m in f, apply
// to g, take the constant term. Rejects even-indexed variables.
Rational q_inner(const Poly& f, const Poly& g);
// Schur-side analogue with t_m -> (1/m) d/dt_m, defined on all of C[t].
Rational hall_inner(const Poly& f, const Poly& g);

LinComb expand_in_basis(const Poly& p, Basis basis);

std::string basis_name(Basis b);

}  // namespace schurw
