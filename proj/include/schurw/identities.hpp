#pragma once

#include <string>
#include <vector>

#include "schurw/labels.hpp"
#include "schurw/rational.hpp"
#include "schurw/vertex.hpp"

namespace schurw {

// Word in the lowering operators D_i A_mu = A_{mu - 2 e_i} / (mu_i - 1),
// e.g. D_1^2 D_3. Index is 0-based here; counts >= 1.
struct DWord {
    std::vector<std::pair<int, int>> factors;  // (component index, count)
};

// Applies the word right to left (innermost substitution first); each
// step divides by the current component value minus one. Terminal value
// through the evaluation-based A.
Rational apply_D(const DWord& word, const IntVector& mu);

// First and second total lowering sums D = sum_i D_i acting on A_lambda.
Rational DA(const IntVector& lambda);
Rational D2A(const IntVector& lambda);

// Combinatorial identity drivers of the tau_KW proof.
Rational phi(const IntVector& mu);
Rational gamma_sum(const IntVector& nu);
Rational psi_sum(const IntVector& nu);

// Both sides of the four expansion displays relating D A_{2 nu} and
// D^2 A_{2 nu} to expansions with respect to components; used as
// finite-instance checkers.
std::pair<Rational, Rational> dexp_last(const IntVector& nu);        // D A, n = l
std::pair<Rational, Rational> dexp_last2(const IntVector& nu);       // D^2 A, n = l
std::pair<Rational, Rational> dexp_symmetric(const IntVector& nu);   // D A, nu_l >= 1
std::pair<Rational, Rational> dexp_symmetric2(const IntVector& nu);  // D^2 A, nu_l >= 2

struct HookVerdict {
    bool equal;
    Poly lhs;
    Poly rhs;
};

// S_{(lambda, n, 1^m)} = delta_{m,-n} (-1)^m S_lambda, both sides as
// polynomials.
HookVerdict check_hook_lemma(const IntVector& lambda, int n, int m);

// Closed action of B*_n on S_lambda, straightened.
LinComb bstar_on_schur_closed(int n, const IntVector& lambda);

// Closed (W_KW)^perp action on a label.
LinComb wkw_perp_closed(const IntVector& mu);

}  // namespace schurw
