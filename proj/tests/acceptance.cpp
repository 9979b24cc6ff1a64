// Acceptance suite: one pass/fail line per criterion, exact equality
// everywhere. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "schurw/verify.hpp"

using namespace schurw;

namespace {

int failures = 0;

void report(int idx, const std::string& what, const SuiteResult& r,
            double seconds) {
    std::printf("[%2d] %s — %s (%lld cases, %.1fs)\n", idx,
                r.pass() ? "PASS" : "FAIL", what.c_str(), r.cases, seconds);
    if (!r.pass()) {
        ++failures;
        std::size_t shown = 0;
        for (const auto& f : r.failures) {
            if (shown++ == 5) {
                std::printf("      ... %zu more\n", r.failures.size() - 5);
                break;
            }
            std::printf("      %s\n", f.c_str());
        }
    }
    std::fflush(stdout);
}

template <typename F>
SuiteResult timed(F&& f, double& seconds) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
    return r;
}

}  // namespace

int main() {
    double sec = 0;

    auto q_start = std::chrono::steady_clock::now();
    TheoremSweep q = sweep_q(8);
    double q_sec = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - q_start)
                       .count();
    report(1, "closed Q-action vs vertex-sum sweep", q.closed_vs_brute, q_sec);

    auto s_start = std::chrono::steady_clock::now();
    TheoremSweep s = sweep_schur(8);
    double s_sec = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - s_start)
                       .count();
    report(2, "closed Schur-action vs vertex-sum sweep", s.closed_vs_brute,
           s_sec);

    SuiteResult modes = q.modes_vs_brute;
    modes.merge(s.modes_vs_brute);
    report(3, "mode-operator vs vertex-sum agreement", modes, 0.0);

    report(4, "named closed actions vs differential operators",
           timed([] { return verify_named(8); }, sec), sec);
    report(5, "BGW tau expansion, two methods",
           timed([] { return verify_tau_bgw(6); }, sec), sec);
    report(6, "KW tau expansion, two methods",
           timed([] { return verify_tau_kw(4); }, sec), sec);
    report(7, "chain counting identity",
           timed([] { return verify_chain(12); }, sec), sec);

    SuiteResult oracles("E/A oracles");
    {
        auto start = std::chrono::steady_clock::now();
        oracles.merge(verify_E_oracle(10));
        oracles.merge(verify_A_oracle(12));
        sec = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
    }
    report(8, "E and A coefficient oracles", oracles, sec);

    report(9, "identity suite (Phi/Gamma/Psi/D/hook/B*/adjoint)",
           timed([] { return verify_identities(); }, sec), sec);

    SuiteResult rel("algebra relations");
    {
        auto start = std::chrono::steady_clock::now();
        rel.merge(verify_relations());
        rel.merge(verify_virasoro());
        sec = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
    }
    report(10, "vertex-operator relations, Heisenberg, Virasoro", rel, sec);

    SuiteResult eig = q.eigen;
    eig.merge(s.eigen);
    report(11, "eigenfunction property at m = 0", eig, 0.0);

    return failures;
}
