#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "schurw/identities.hpp"
#include "schurw/json_io.hpp"
#include "schurw/labels.hpp"
#include "schurw/tau.hpp"
#include "schurw/verify.hpp"
#include "schurw/vertex.hpp"
#include "schurw/wops.hpp"

namespace {

using namespace schurw;

IntVector parse_label(const std::string& s) {
    IntVector v;
    if (s.empty()) return v;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - pos);
        v.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return v;
}

std::vector<Rational> parse_args_list(const std::string& s) {
    std::vector<Rational> v;
    if (s.empty()) return v;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - pos);
        v.push_back(rat_from_string(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return v;
}

IntVector to_label(const std::vector<Rational>& args, std::size_t from) {
    IntVector v;
    for (std::size_t i = from; i < args.size(); ++i) {
        if (args[i].get_den() != 1)
            throw std::invalid_argument("label entries must be integers");
        v.push_back(static_cast<int>(args[i].get_num().get_si()));
    }
    return v;
}

long to_long(const Rational& r) {
    if (r.get_den() != 1)
        throw std::invalid_argument("expected an integer argument");
    return r.get_num().get_si();
}

int run_fn(const std::string& basis, const std::string& lambda,
           const std::string& rho_str, bool pretty) {
    IntVector lam = parse_label(lambda);
    Poly p;
    if (basis == "schur") {
        p = schur(lam);
    } else if (basis == "q") {
        p = qfun(lam);
    } else if (basis == "hl") {
        RhoParam rho(rat_from_string(rho_str));
        p = hall_littlewood(lam, rho);
    } else {
        throw CLI::ValidationError("--basis must be schur, q or hl");
    }
    Json out{{"terms", poly_to_json(p)}};
    std::cout << dump(out, pretty) << "\n";
    return 0;
}

int run_coef(const std::string& name, const std::string& args_str,
             bool pretty) {
    auto args = parse_args_list(args_str);
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("--name " + name + " expects " +
                                        std::to_string(n) + " argument(s)");
    };
    Rational value;
    if (name == "d") {
        need(2);
        value = coeff_d(to_long(args[0]), to_long(args[1]));
    } else if (name == "c") {
        need(3);
        value = coeff_c(to_long(args[0]), to_long(args[1]), to_long(args[2]));
    } else if (name == "h") {
        need(3);
        value = coeff_h(to_long(args[0]), to_long(args[1]), RhoParam(args[2]));
    } else if (name == "g") {
        need(3);
        value = coeff_g(to_long(args[0]), to_long(args[1]), RhoParam(args[2]));
    } else if (name == "E") {
        value = E_coeff(to_label(args, 0));
    } else if (name == "A") {
        value = A_coeff(to_label(args, 0));
    } else if (name == "c-chain") {
        value = Rational(chain_count(to_label(args, 0)));
    } else if (name == "dfact") {
        need(1);
        value = double_fact(to_long(args[0]));
    } else {
        throw CLI::ValidationError("unknown coefficient name: " + name);
    }
    std::cout << dump(rational_to_json(value), pretty) << "\n";
    return 0;
}

int run_act(const std::string& op_name, long k, long m,
            const std::string& basis_str, const std::string& lambda,
            const std::string& mode, bool pretty) {
    IntVector lam = parse_label(lambda);
    Basis basis = basis_str == "q" ? Basis::Q : Basis::Schur;
    if (basis_str != "q" && basis_str != "schur")
        throw CLI::ValidationError("--basis must be schur or q");

    Json out;
    bool agree = true;
    bool has_closed = false, has_brute = false, has_modes = false;
    LinComb closed(basis);
    Poly brute, modes;

    if (op_name == "P") {
        const RhoParam& rho = basis == Basis::Q ? rho_q() : rho_schur();
        if (mode == "closed" || mode == "all") {
            closed = basis == Basis::Q ? apply_P_closed_q(k, m, lam)
                                       : apply_P_closed_s(k, m, lam);
            has_closed = true;
        }
        if (mode == "brute" || mode == "all") {
            brute = apply_P_brute({k, m, rho}, basis_poly(basis, lam));
            has_brute = true;
        }
        if (mode == "modes" || (mode == "all" && k <= 3)) {
            modes = apply_P_modes({k, m, rho}, basis_poly(basis, lam));
            has_modes = true;
        }
    } else {
        NamedOp op = named_op_from_string(op_name, m);
        if (op.basis() != basis)
            throw CLI::ValidationError("operator " + op_name +
                                       " acts on basis " +
                                       basis_name(op.basis()));
        if (mode == "closed" || mode == "all") {
            closed = closed_action_named(op, lam);
            has_closed = true;
        }
        if (mode == "brute" || mode == "modes" || mode == "all") {
            brute = apply_named(op, basis_poly(basis, lam));
            has_brute = true;
        }
    }

    if (has_closed) out["closed"] = lincomb_to_json(closed);
    if (has_brute) out["poly"] = poly_to_json(brute);
    if (has_modes) out["modes"] = poly_to_json(modes);
    if (mode == "all") {
        Poly reference = has_brute ? brute : modes;
        if (has_closed && closed.to_poly() != reference) agree = false;
        if (has_modes && has_brute && modes != brute) agree = false;
        out["agree"] = agree;
    }
    std::cout << dump(out, pretty) << "\n";
    return agree ? 0 : 1;
}

int run_tau(const std::string& model, int order, const std::string& method,
            bool pretty) {
    TauMethod tm = tau_method_from_string(method);
    Series s = model == "bgw" ? tau_bgw(order, tm) : tau_kw(order, tm);
    std::cout << dump(series_to_json(s), pretty) << "\n";
    return 0;
}

Json suite_to_json(const SuiteResult& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(f);
    return Json{{"suite", r.name},
                {"cases", r.cases},
                {"pass", r.pass()},
                {"failures", failures}};
}

int run_verify(const std::string& suite, int max_weight, bool pretty) {
    std::vector<SuiteResult> results;
    auto want = [&](const char* name) {
        return suite == name || suite == "all";
    };
    if (want("thm1")) {
        TheoremSweep s = sweep_q(max_weight);
        s.closed_vs_brute.name = "thm1/closed-vs-brute";
        s.modes_vs_brute.name = "thm1/modes-vs-brute";
        s.eigen.name = "thm1/eigenfunction";
        results.push_back(s.closed_vs_brute);
        results.push_back(s.modes_vs_brute);
        results.push_back(s.eigen);
    }
    if (want("thm2")) {
        TheoremSweep s = sweep_schur(max_weight);
        s.closed_vs_brute.name = "thm2/closed-vs-brute";
        s.modes_vs_brute.name = "thm2/modes-vs-brute";
        s.eigen.name = "thm2/eigenfunction";
        results.push_back(s.closed_vs_brute);
        results.push_back(s.modes_vs_brute);
        results.push_back(s.eigen);
    }
    if (want("relations")) results.push_back(verify_relations());
    if (want("virasoro")) results.push_back(verify_virasoro());
    if (want("named"))
        results.push_back(verify_named(std::min(max_weight, 8)));
    if (want("bgw")) {
        results.push_back(verify_tau_bgw(6));
        results.push_back(verify_chain(12));
        results.push_back(verify_E_oracle(10));
    }
    if (want("kw")) {
        results.push_back(verify_tau_kw(4));
        results.push_back(verify_A_oracle(12));
        results.push_back(verify_a_pairing(4));
    }
    if (want("identities")) results.push_back(verify_identities());
    for (const char* part :
         {"phi", "gamma", "psi", "hook", "bstar", "dexp", "adjoint"})
        if (suite == part) results.push_back(verify_identities(part));
    if (results.empty())
        throw CLI::ValidationError("unknown suite: " + suite);

    Json out = Json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        out.push_back(suite_to_json(r));
        all_pass = all_pass && r.pass();
    }
    std::cout << dump(out, pretty) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact vertex-operator engine for Schur and Schur Q-functions"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    auto* fn = app.add_subcommand("fn", "construct a character polynomial");
    std::string fn_basis, fn_lambda, fn_rho = "0";
    fn->add_option("--basis", fn_basis, "schur|q|hl")->required();
    fn->add_option("--lambda", fn_lambda, "comma-separated integer label");
    fn->add_option("--rho", fn_rho, "rho as p/q (hl basis)");

    auto* act = app.add_subcommand("act", "apply an operator to a label");
    std::string act_op, act_basis, act_lambda, act_mode = "closed";
    long act_k = 1, act_m = 0;
    act->add_option("--op", act_op, "P|L|Lhat|W|What|Nhat|W0|WBGW|WKW|WKWperp|What3")
        ->required();
    act->add_option("--k", act_k, "order k for op P");
    act->add_option("--m", act_m, "mode index m");
    act->add_option("--basis", act_basis, "schur|q")->required();
    act->add_option("--lambda", act_lambda, "comma-separated integer label");
    act->add_option("--mode", act_mode, "closed|brute|modes|all");

    auto* coef = app.add_subcommand("coef", "evaluate a coefficient function");
    std::string coef_name, coef_args;
    coef->add_option("--name", coef_name, "d|c|h|g|E|A|c-chain|dfact")
        ->required();
    coef->add_option("--args", coef_args, "comma-separated arguments");

    auto* tau = app.add_subcommand("tau", "tau-function expansion");
    std::string tau_model, tau_method = "both";
    int tau_order = 0;
    tau->add_option("--model", tau_model, "bgw|kw")->required();
    tau->add_option("--order", tau_order, "hbar truncation order")->required();
    tau->add_option("--method", tau_method, "cutjoin|closed|both");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite;
    int verify_weight = 8;
    verify
        ->add_option("--suite", verify_suite,
                     "thm1|thm2|relations|virasoro|named|bgw|kw|identities|all"
                     " or one of phi|gamma|psi|hook|bstar|dexp|adjoint")
        ->required();
    verify->add_option("--max-weight", verify_weight, "sweep size (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fn->parsed()) return run_fn(fn_basis, fn_lambda, fn_rho, pretty);
        if (act->parsed())
            return run_act(act_op, act_k, act_m, act_basis, act_lambda,
                           act_mode, pretty);
        if (coef->parsed()) return run_coef(coef_name, coef_args, pretty);
        if (tau->parsed())
            return run_tau(tau_model, tau_order, tau_method, pretty);
        if (verify->parsed())
            return run_verify(verify_suite, verify_weight, pretty);
    } catch (const schurw::DiscrepancyError& e) {
        std::cerr << "discrepancy: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
