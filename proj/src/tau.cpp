#include "schurw/tau.hpp"

#include <algorithm>
#include <mutex>

#include "schurw/vertex.hpp"
#include "schurw/wops.hpp"

namespace schurw {

const Poly& Series::component(int n) const {
    static const Poly zero;
    auto it = components.find(n);
    return it == components.end() ? zero : it->second;
}

TauMethod tau_method_from_string(const std::string& s) {
    if (s == "cutjoin") return TauMethod::CutJoin;
    if (s == "closed") return TauMethod::Closed;
    if (s == "both") return TauMethod::Both;
    throw std::invalid_argument("unknown tau method: " + s);
}

Rational E_coeff(const IntVector& lambda) {
    if (!lambda.empty() && !is_strict_partition(lambda))
        throw std::invalid_argument("E_coeff needs a strict partition");
    // E = 2^{|lambda|} / prod lambda_i! * prod_{i<j} (l_i-l_j)/(l_i+l_j)
    Rational r(int_pow(2, static_cast<unsigned long>(weight(lambda))));
    for (int part : lambda)
        r /= Rational(factorial(static_cast<unsigned long>(part)));
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j)
            r *= rat(lambda[i] - lambda[j], lambda[i] + lambda[j]);
    r.canonicalize();
    return r;
}

namespace {

std::mutex a_mutex;
std::map<IntVector, Rational> a_cache;

Rational a_eval_strict(const IntVector& strict) {
    VarAssignment at;
    at[3] = rat(1, 3);
    return qfun(strict).evaluate(at);
}

}  // namespace

Rational A_coeff(const IntVector& lambda) {
    if (weight(lambda) % 3 != 0) return Rational(0);
    {
        std::lock_guard<std::mutex> lock(a_mutex);
        auto it = a_cache.find(lambda);
        if (it != a_cache.end()) return it->second;
    }
    Rational total(0);
    for (const auto& [strict, c] : straighten_q(lambda).terms)
        total += c * a_eval_strict(strict);
    std::lock_guard<std::mutex> lock(a_mutex);
    a_cache.emplace(lambda, total);
    return total;
}

Rational A_pair(long a, long b) {
    if ((a + b) % 3 != 0) return Rational(0);
    if (a < 0 || b < 0 || (a == 0 && b == 0))
        throw std::invalid_argument("A_pair needs a weakly positive pair");
    long ra = ((a % 3) + 3) % 3;
    if (ra == 0) {
        long k1 = a / 3, k2 = b / 3;
        Rational r = rat_pow(rat(2, 3), k1 + k2);
        r /= Rational(factorial(static_cast<unsigned long>(k1)) *
                      factorial(static_cast<unsigned long>(k2)));
        r *= rat(k1 - k2, k1 + k2);
        r.canonicalize();
        return r;
    }
    if (ra == 2) return -A_pair(b, a);  // skew symmetry of the pair
    long m = (a - 1) / 3, n = (b - 2) / 3;
    Rational r = rat_pow(rat(2, 3), m + n + 1) * 2;
    r /= Rational(factorial(static_cast<unsigned long>(m)) *
                  factorial(static_cast<unsigned long>(n)) * Integer(m + n + 1));
    r.canonicalize();
    return r;
}

namespace {

// A on strict partitions of length <= 2 straight from the closed forms;
// base of the recursion below.
Rational A_base(const IntVector& label) {
    LinComb lc = straighten_q(label);
    Rational total(0);
    for (const auto& [strict, c] : lc.terms) {
        if (strict.size() > 2)
            throw std::logic_error("A_base expects length <= 2 after straightening");
        if (strict.empty()) {
            total += c;
        } else if (strict.size() == 1) {
            if (strict[0] % 3 == 0) total += c * A_pair(strict[0], 0);
        } else {
            total += c * A_pair(strict[0], strict[1]);
        }
    }
    return total;
}

Rational a_pfaffian_rec(const IntVector& lambda) {
    if (weight(lambda) % 3 != 0) return Rational(0);
    const int l = static_cast<int>(lambda.size());
    if (l <= 2) return A_base(lambda);
    // expansion with respect to the last component:
    // A_lambda = sum_{m<l} (-1)^{m+1} A_{(lambda_m, lambda_l)} A_{lambda^{m,l}}
    Rational total(0);
    for (int m = 0; m + 1 < l; ++m) {
        Rational pairv = a_pfaffian_rec({lambda[m], lambda[l - 1]});
        if (pairv == 0) continue;
        Rational rest = a_pfaffian_rec(erase_components(lambda, {m, l - 1}));
        if (rest == 0) continue;
        total += Rational(parity_sign(m)) * pairv * rest;  // (-1)^{(m+1)+1}, 1-based
    }
    return total;
}

}  // namespace

Rational A_pfaffian(const IntVector& lambda) {
    if (lambda.size() % 2 != 0)
        throw std::invalid_argument("A_pfaffian needs an even-length label");
    return a_pfaffian_rec(lambda);
}

namespace {

std::mutex chain_mutex;
std::map<IntVector, Integer> chain_cache;

Integer chain_count_rec(const IntVector& mu) {
    if (mu.empty()) return Integer(1);
    {
        std::lock_guard<std::mutex> lock(chain_mutex);
        auto it = chain_cache.find(mu);
        if (it != chain_cache.end()) return it->second;
    }
    Integer total(0);
    const int l = static_cast<int>(mu.size());
    for (int i = 0; i < l; ++i) {
        IntVector prev = mu;
        prev[i] -= 1;
        if (prev[i] == 0) {
            if (i != l - 1) continue;
            prev.pop_back();
        } else if (i + 1 < l && prev[i] <= prev[i + 1]) {
            continue;
        }
        total += chain_count_rec(prev);
    }
    std::lock_guard<std::mutex> lock(chain_mutex);
    chain_cache.emplace(mu, total);
    return total;
}

}  // namespace

Integer chain_count(const IntVector& mu) {
    if (!mu.empty() && !is_strict_partition(mu))
        throw std::invalid_argument("chain_count needs a strict partition");
    return chain_count_rec(mu);
}

Rational double_fact(long n) {
    if (n % 2 == 0) throw std::invalid_argument("double_fact needs an odd argument");
    if (n >= 1) {
        Integer r(1);
        for (long v = n; v >= 1; v -= 2) r *= Integer(v);
        return Rational(r);
    }
    if (n == -1) return Rational(1);
    long k = (-n - 1) / 2;  // n = -2k-1
    Rational r = Rational(parity_sign(k)) / double_fact(2 * k - 1);
    r.canonicalize();
    return r;
}

Rational a_coeff(const IntVector& lambda) {
    long w = weight(lambda);
    if (w % 3 != 0) return Rational(0);
    IntVector doubled = lambda;
    for (int& x : doubled) x *= 2;
    Rational r = A_coeff(doubled);
    if (r == 0) return r;
    r *= rat_pow(rat(1, 16), w / 3);
    for (int part : lambda) r *= double_fact(2 * part - 1);
    return r;
}

namespace {

Series tau_cutjoin(int order, const NamedOp& op) {
    Series s;
    s.order = order;
    Poly comp(Rational(1));
    s.components[0] = comp;
    for (int n = 1; n <= order; ++n) {
        comp = apply_named(op, comp).scale(rat(1, n));
        s.components[n] = comp;
    }
    return s;
}

Series tau_closed_bgw(int order) {
    Series s;
    s.order = order;
    for (int n = 0; n <= order; ++n) {
        Poly comp;
        for (const auto& lam : strict_partitions_of(n)) {
            // 2^{-l} (1/16)^{|lam|} E^3/E_{2 lam}^2 =
            // 2^{-l} (1/16)^{|lam|} E * (prod (2 lam_i - 1)!!)^2
            Rational c = E_coeff(lam);
            for (int part : lam) {
                Rational df = double_fact(2 * part - 1);
                c *= df * df;
            }
            c *= rat_pow(rat(1, 2), static_cast<long>(lam.size()));
            c *= rat_pow(rat(1, 16), n);
            comp.add_scaled(qfun(lam), c);
        }
        s.components[n] = std::move(comp);
    }
    return s;
}

Series tau_closed_kw(int order) {
    Series s;
    s.order = order;
    for (int n = 0; n <= order; ++n) {
        Poly comp;
        for (const auto& lam : strict_partitions_of(3 * n)) {
            IntVector doubled = lam;
            for (int& x : doubled) x *= 2;
            Rational c = A_coeff(doubled);
            if (c == 0) continue;
            for (int part : lam) c *= double_fact(2 * part - 1);
            c *= rat_pow(rat(1, 2), static_cast<long>(lam.size()));
            c *= rat_pow(rat(1, 16), n);
            comp.add_scaled(qfun(lam), c);
        }
        s.components[n] = std::move(comp);
    }
    return s;
}

Series tau_dispatch(int order, TauMethod method, const NamedOp& op,
                    Series (*closed)(int), const char* model) {
    switch (method) {
        case TauMethod::CutJoin:
            return tau_cutjoin(order, op);
        case TauMethod::Closed:
            return closed(order);
        case TauMethod::Both: {
            Series a = tau_cutjoin(order, op);
            Series b = closed(order);
            if (!(a == b))
                throw DiscrepancyError(std::string(model) +
                                       ": cut-and-join and closed expansions disagree");
            return a;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Series tau_bgw(int order, TauMethod method) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    return tau_dispatch(order, method, {NamedKind::WBGW, 0}, tau_closed_bgw,
                        "tau_bgw");
}

Series tau_kw(int order, TauMethod method) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    return tau_dispatch(order, method, {NamedKind::WKW, 0}, tau_closed_kw,
                        "tau_kw");
}

}  // namespace schurw
