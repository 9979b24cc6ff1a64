#pragma once

#include <string>
#include <vector>

#include "schurw/rational.hpp"

namespace schurw {

struct SuiteResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;

    explicit SuiteResult(std::string n) : name(std::move(n)) {}
    bool pass() const { return failures.empty(); }
    void check(bool ok, const std::string& what);
    void merge(const SuiteResult& o);
};

// Closed-form vs vertex-sum vs mode sweeps over one basis; the three
// sub-results line up with separate acceptance criteria but share the
// expensive vertex-sum evaluations.
struct TheoremSweep {
    SuiteResult closed_vs_brute{"closed-vs-brute"};
    SuiteResult modes_vs_brute{"modes-vs-brute"};
    SuiteResult eigen{"eigenfunction"};
};

// Q-side / Schur-side sweeps: strict partitions up to max_weight for
// all k in {1..4}, m in [-5,5], plus length <= 3 labels with entries in
// [-2,5].
TheoremSweep sweep_q(int max_weight);
TheoremSweep sweep_schur(int max_weight);

SuiteResult verify_named(int max_weight);
SuiteResult verify_tau_bgw(int order);
SuiteResult verify_tau_kw(int order);
SuiteResult verify_chain(int max_weight);
SuiteResult verify_E_oracle(int max_weight);
SuiteResult verify_A_oracle(int max_entry);
SuiteResult verify_a_pairing(int order);
// part selects one identity family ("phi", "gamma", "psi", "hook",
// "bstar", "dexp", "adjoint"); empty runs everything.
SuiteResult verify_identities(const std::string& part = "");
SuiteResult verify_relations();
SuiteResult verify_virasoro();

}  // namespace schurw
