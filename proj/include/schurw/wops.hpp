#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurw/poly.hpp"
#include "schurw/rational.hpp"
#include "schurw/vertex.hpp"

namespace schurw {

// [n]_k = n (n-1) ... (n-k+1), defined for any integer n; [n]_0 = 1.
Integer falling(long n, long k);
// binom(n, k) = [n]_k / k!, again for any integer n.
Rational binom_int(long n, long k);

// Coefficient families of the closed actions and the vertex-sum form.
Rational coeff_d(long k, long n);
Rational coeff_c(long k, long m, long n);
Rational coeff_h(long k, long b, const RhoParam& rho);
Rational coeff_g(long k, long b, const RhoParam& rho);

// Star products, literal per definition:
//   rho = 0:  B*_a * B_b = B*_a B_b - delta_{a,b} delta_{b>=0}
//   rho = -1: B_a * B_b  = B_a B_b - 2 (-1)^b delta_{a,-b} delta_{b>=0}
Poly star_schur(int a, int b, const Poly& p);
Poly star_q(int a, int b, const Poly& p);

struct OpSpec {
    long k;
    long m;
    RhoParam rho;
};

// Evaluates P^(k)_m . p through the star-product vertex sum, reusing
// the intermediate B_b p and its derivative family across modes. One
// instance amortizes the expensive pieces over all (k, m) pairs asked
// of the same input polynomial.
class PBrute {
  public:
    PBrute(Poly p, const RhoParam& rho);

    Poly apply(long k, long m);

  private:
    const Poly& intermediate(int b);
    const std::vector<Poly>& intermediate_family(int b);
    const Poly& star(int a, int b);

    Poly p_;
    Rational rho_;  // 0 or -1
    long deg_;
    std::vector<Poly> p_low_;
    std::map<int, Poly> wb_;
    std::map<int, std::vector<Poly>> wb_fam_;
    std::map<std::pair<int, int>, Poly> star_cache_;
};

Poly apply_P_brute(const OpSpec& spec, const Poly& p);

// Direct normal-ordered mode action for k <= 3 at any rho != 1.
Poly apply_J_mode(long m, const RhoParam& rho, const Poly& p);
Poly quadratic_modes(long m, const RhoParam& rho, const Poly& p);
Poly cubic_modes(long m, const RhoParam& rho, const Poly& p);
Poly apply_P_modes(const OpSpec& spec, const Poly& p);

// Closed-form actions on labels, straightened.
LinComb apply_P_closed_q(long k, long m, const IntVector& lambda);
LinComb apply_P_closed_s(long k, long m, const IntVector& lambda);
// Linear extensions to straightened combinations.
LinComb apply_P_closed_lc(long k, long m, const LinComb& in);

enum class NamedKind { L, Lhat, W, What, Nhat, W0, WBGW, WKW, WKWperp, What3 };

struct NamedOp {
    NamedKind kind;
    long m = 0;

    // Throws on parity violations (What: odd m, Nhat: even m).
    void validate() const;
    bool takes_m() const;
    bool hatted() const;  // acts on the odd-variable subring
    Basis basis() const { return hatted() ? Basis::Q : Basis::Schur; }
    std::string name() const;
};

NamedOp named_op_from_string(const std::string& name, long m);

// Literal differential-operator action built from mode sums (N-hat is
// assembled from the vertex-sum evaluator with derivative prefactors).
Poly apply_named(const NamedOp& op, const Poly& p);
// The same operators acting on labels through the closed formulas.
LinComb closed_action_named(const NamedOp& op, const IntVector& lambda);
LinComb closed_action_named_lc(const NamedOp& op, const LinComb& in);

}  // namespace schurw
