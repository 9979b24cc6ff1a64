#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "schurw/labels.hpp"
#include "schurw/poly.hpp"
#include "schurw/rational.hpp"

namespace schurw {

// Truncated tau-function expansion: map from hbar exponent to the exact
// polynomial component. hbar is a series index, never a ring variable.
struct Series {
    int order = 0;
    std::map<int, Poly> components;

    bool operator==(const Series& o) const {
        return order == o.order && components == o.components;
    }
    const Poly& component(int n) const;
};

enum class TauMethod { CutJoin, Closed, Both };

TauMethod tau_method_from_string(const std::string& s);

// Raised when method = Both detects the two expansions disagreeing.
struct DiscrepancyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// E_lambda = Q_lambda(1, 0, 0, ...) via the product formula.
Rational E_coeff(const IntVector& lambda);
// A_lambda = Q_lambda(0, 1/3, 0, ...) extended to arbitrary integer
// labels by straightening and evaluating.
Rational A_coeff(const IntVector& lambda);
// Pfaffian-style recursion for A on even-length labels, expanded with
// respect to the last component; length-2 base cases use the closed
// forms and the mod-3 vanishing rule.
Rational A_pfaffian(const IntVector& lambda);
// Closed form for weakly positive pairs.
Rational A_pair(long a, long b);

// Number of chains of strict partitions from the empty partition to mu
// adding one box at a time.
Integer chain_count(const IntVector& mu);

// Extended double factorial: (-1)!! = 1, (-2k-1)!! = (-1)^k / (2k-1)!!.
Rational double_fact(long n);

// a_lambda = A_{2 lambda} (1/16)^{|lambda|/3} prod (2 lambda_i - 1)!!,
// the hbar-stripped pairing coefficient; 0 unless 3 divides |lambda|.
Rational a_coeff(const IntVector& lambda);

Series tau_bgw(int order, TauMethod method);
Series tau_kw(int order, TauMethod method);

}  // namespace schurw
