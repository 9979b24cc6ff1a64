#include "schurw/vertex.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>

namespace schurw {

void LinComb::add(const IntVector& label, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(label, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    if (basis != o.basis)
        throw std::invalid_argument("mixed-basis linear combination");
    for (const auto& [l, c] : o.terms) add(l, c);
    return *this;
}

LinComb& LinComb::add_scaled(const LinComb& o, const Rational& c) {
    if (basis != o.basis)
        throw std::invalid_argument("mixed-basis linear combination");
    if (c == 0) return *this;
    for (const auto& [l, v] : o.terms) add(l, v * c);
    return *this;
}

LinComb LinComb::scaled(const Rational& c) const {
    LinComb r(basis);
    if (c == 0) return r;
    r.terms = terms;
    for (auto& [l, v] : r.terms) v *= c;
    return r;
}

Poly LinComb::to_poly() const {
    Poly p;
    for (const auto& [l, c] : terms) p.add_scaled(basis_poly(basis, l), c);
    return p;
}

std::string LinComb::str() const {
    std::ostringstream os;
    os << basis_name(basis) << "{";
    bool first = true;
    for (const auto& [l, c] : terms) {
        if (!first) os << ", ";
        first = false;
        os << "(";
        for (std::size_t i = 0; i < l.size(); ++i)
            os << (i ? "," : "") << l[i];
        os << "): " << rat_to_string(c);
    }
    os << "}";
    return os.str();
}

std::string basis_name(Basis b) { return b == Basis::Schur ? "schur" : "q"; }

// ---------------------------------------------------------------------------
// Exponential series caches.

namespace {

struct ExpCache {
    Rational rho;
    bool negated;
    std::deque<Poly> coeffs;        // coeffs[r] once computed
    std::vector<Rational> rho_pow;  // rho^m
};

std::mutex exp_mutex;
std::deque<ExpCache> exp_caches;

// r * E_r = sign * sum_{m=1}^{r} m (1-rho^m) t_m E_{r-m}
const Poly& exp_coeff_locked(ExpCache& cache, int r) {
    if (cache.coeffs.empty()) {
        cache.coeffs.emplace_back(Poly(Rational(1)));
        cache.rho_pow = {Rational(1)};
    }
    while (static_cast<int>(cache.coeffs.size()) <= r) {
        int k = static_cast<int>(cache.coeffs.size());
        while (static_cast<int>(cache.rho_pow.size()) <= k)
            cache.rho_pow.push_back(cache.rho_pow.back() * cache.rho);
        PolyBuilder acc;
        for (int m = 1; m <= k; ++m) {
            Rational a = (Rational(1) - cache.rho_pow[m]) * m;
            if (cache.negated) a = -a;
            if (a == 0) continue;
            a /= k;
            Monomial tm = Monomial::var(m);
            for (const auto& [mon, c] : cache.coeffs[k - m].terms())
                acc.add(mon * tm, c * a);
        }
        cache.coeffs.push_back(acc.build());
    }
    return cache.coeffs[r];
}

}  // namespace

const Poly& exp_series_coeff(const Rational& rho, bool negated, int r) {
    if (r < 0) {
        static const Poly zero;
        return zero;
    }
    std::lock_guard<std::mutex> lock(exp_mutex);
    for (auto& c : exp_caches)
        if (c.negated == negated && c.rho == rho) return exp_coeff_locked(c, r);
    exp_caches.push_back(ExpCache{rho, negated, {}, {}});
    return exp_coeff_locked(exp_caches.back(), r);
}

// s * q_s = sign * sum_{m=1}^{s} d/dt_m q_{s-m}
static std::vector<Poly> derivative_family(const Poly& p, int sign) {
    long deg = p.degree();
    std::vector<Poly> fam;
    fam.push_back(p);
    if (deg < 0) return fam;
    for (int s = 1; s <= deg; ++s) {
        Poly acc;
        for (int m = 1; m <= s; ++m) acc += fam[s - m].partial(m);
        acc.scale_in_place(rat(sign, s));
        fam.push_back(std::move(acc));
    }
    return fam;
}

std::vector<Poly> lower_family(const Poly& p) { return derivative_family(p, -1); }
std::vector<Poly> raise_family(const Poly& p) { return derivative_family(p, +1); }

Poly apply_B_from_family(int n, const std::vector<Poly>& fam,
                         const Rational& rho) {
    // B_n p = sum_s E_{n+s} q_s with q_s the lower family of p.
    Poly acc;
    for (int s = 0; s < static_cast<int>(fam.size()); ++s) {
        if (n + s < 0 || fam[s].is_zero()) continue;
        const Poly& e = exp_series_coeff(rho, false, n + s);
        PolyBuilder b;
        b.add_product_poly(e, fam[s], Rational(1));
        acc += b.build();
    }
    return acc;
}

Poly apply_Bstar_from_family(int n, const std::vector<Poly>& fam,
                             const Rational& rho) {
    // B*_n p = sum_s Ebar_{s-n} q*_s with q*_s the raise family of p.
    Poly acc;
    for (int s = 0; s < static_cast<int>(fam.size()); ++s) {
        if (s - n < 0 || fam[s].is_zero()) continue;
        const Poly& e = exp_series_coeff(rho, true, s - n);
        PolyBuilder b;
        b.add_product_poly(e, fam[s], Rational(1));
        acc += b.build();
    }
    return acc;
}

Poly apply_B(int n, const Poly& p, const RhoParam& rho) {
    if (p.is_zero() || n + p.degree() < 0) return Poly();
    return apply_B_from_family(n, lower_family(p), rho.value);
}

Poly apply_Bstar(int n, const Poly& p, const RhoParam& rho) {
    if (p.is_zero() || n > p.degree()) return Poly();
    return apply_Bstar_from_family(n, raise_family(p), rho.value);
}

// ---------------------------------------------------------------------------
// Character polynomials.

namespace {

std::mutex hl_mutex;
std::map<std::pair<int, IntVector>, Poly> hl_cache;  // key: (0|1, label)

Poly hall_littlewood_uncached(const IntVector& lambda, const RhoParam& rho) {
    Poly p(Rational(1));
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) {
        p = apply_B(*it, p, rho);
        if (p.is_zero()) break;
    }
    return p;
}

const Poly& hl_cached(int tag, const IntVector& lambda) {
    std::lock_guard<std::mutex> lock(hl_mutex);
    auto key = std::make_pair(tag, lambda);
    auto it = hl_cache.find(key);
    if (it != hl_cache.end()) return it->second;
    RhoParam rho = tag == 0 ? rho_schur() : rho_q();
    Poly p = hall_littlewood_uncached(lambda, rho);
    return hl_cache.emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace

Poly hall_littlewood(const IntVector& lambda, const RhoParam& rho) {
    if (rho.value == 0) return schur(lambda);
    if (rho.value == -1) return qfun(lambda);
    return hall_littlewood_uncached(lambda, rho);
}

const Poly& schur(const IntVector& lambda) { return hl_cached(0, lambda); }
const Poly& qfun(const IntVector& lambda) { return hl_cached(1, lambda); }

Poly basis_poly(Basis basis, const IntVector& lambda) {
    return basis == Basis::Schur ? schur(lambda) : qfun(lambda);
}

// ---------------------------------------------------------------------------
// Straightening.

LinComb straighten_schur(const IntVector& lambda) {
    LinComb out(Basis::Schur);
    const int l = static_cast<int>(lambda.size());
    // mu_i = lambda_i - i is transposed with a sign flip by the exchange
    // relation B_m B_n = -B_{n-1} B_{m+1}; a repeat means S_lambda = 0.
    std::vector<std::pair<int, int>> mu(l);  // (value, original position)
    for (int i = 0; i < l; ++i) mu[i] = {lambda[i] - (i + 1), i};
    int sign = 1;
    // insertion sort, descending; counts transpositions exactly
    for (int i = 1; i < l; ++i) {
        auto key = mu[i];
        int j = i - 1;
        while (j >= 0 && mu[j].first < key.first) {
            mu[j + 1] = mu[j];
            --j;
            sign = -sign;
        }
        mu[j + 1] = key;
    }
    for (int i = 0; i + 1 < l; ++i)
        if (mu[i].first == mu[i + 1].first) return out;
    IntVector nu(l);
    for (int i = 0; i < l; ++i) nu[i] = mu[i].first + (i + 1);
    if (l > 0 && nu[l - 1] < 0) return out;  // weakly decreasing, so all >= 0 fails at the tail
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    out.add(nu, Rational(sign));
    return out;
}

namespace {

// B_a Q_mu for strict mu, bubbling a into place with the rho = -1
// exchange relation. Parts of the result stay below any part already
// larger than a, so prepending is safe.
LinComb q_insert(int a, const IntVector& mu) {
    LinComb out(Basis::Q);
    if (mu.empty()) {
        if (a > 0)
            out.add({a}, Rational(1));
        else if (a == 0)
            out.add({}, Rational(1));
        return out;  // B_a . 1 = 0 for a < 0
    }
    int head = mu.front();
    if (a > head) {
        IntVector r;
        r.reserve(mu.size() + 1);
        r.push_back(a);
        r.insert(r.end(), mu.begin(), mu.end());
        out.add(r, Rational(1));
        return out;
    }
    if (a == head) return out;  // equal adjacent nonzero parts annihilate
    IntVector rest(mu.begin() + 1, mu.end());
    LinComb sub = q_insert(a, rest);
    for (const auto& [l, c] : sub.terms) {
        IntVector r;
        r.reserve(l.size() + 1);
        r.push_back(head);
        r.insert(r.end(), l.begin(), l.end());
        out.add(r, -c);
    }
    if (a == -head) out.add(rest, rat(2 * parity_sign(a)));
    return out;
}

}  // namespace

LinComb straighten_q(const IntVector& lambda) {
    LinComb acc(Basis::Q);
    acc.add({}, Rational(1));
    // Normalize right to left; memoize per suffix within this call.
    std::map<std::pair<int, IntVector>, LinComb> memo;
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) {
        LinComb next(Basis::Q);
        for (const auto& [mu, c] : acc.terms) {
            auto key = std::make_pair(*it, mu);
            auto found = memo.find(key);
            if (found == memo.end())
                found = memo.emplace(key, q_insert(*it, mu)).first;
            next.add_scaled(found->second, c);
        }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Inner products and basis expansion.

namespace {

// Diagonal pairing sum_alpha f_alpha g_alpha prod_m alpha_m! / w(m)^alpha_m
// where w(m) = 2m for the Q pairing and w(m) = m for the Hall pairing.
Rational diagonal_pairing(const Poly& f, const Poly& g, int weight_factor) {
    const Poly* small = &f;
    const Poly* large = &g;
    if (small->term_count() > large->term_count()) std::swap(small, large);
    Rational total(0);
    for (const auto& [m, cf] : small->terms()) {
        Rational cg = large->coeff(m);
        if (cg == 0) continue;
        Rational norm(1);
        for (const auto& [n, e] : m.entries())
            norm *= Rational(factorial(e)) /
                    rat_pow(rat(static_cast<long>(weight_factor) * n),
                            e);
        total += cf * cg * norm;
    }
    return total;
}

void require_odd(const Poly& p, const char* who) {
    if (!p.odd_support_only())
        throw std::domain_error(std::string(who) +
                                ": polynomial involves an even-indexed variable");
}

}  // namespace

Rational q_inner(const Poly& f, const Poly& g) {
    require_odd(f, "q_inner");
    require_odd(g, "q_inner");
    return diagonal_pairing(f, g, 2);
}

Rational hall_inner(const Poly& f, const Poly& g) {
    return diagonal_pairing(f, g, 1);
}

LinComb expand_in_basis(const Poly& p, Basis basis) {
    LinComb out(basis);
    if (basis == Basis::Q) require_odd(p, "expand_in_basis");
    for (long d : p.degrees_present()) {
        Poly comp = p.homogeneous_component(d);
        auto labels = basis == Basis::Q ? strict_partitions_of(static_cast<int>(d))
                                        : partitions_of(static_cast<int>(d));
        for (const auto& l : labels) {
            Rational c = basis == Basis::Q
                             ? q_inner(qfun(l), comp) /
                                   rat_pow(rat(2), static_cast<long>(l.size()))
                             : hall_inner(schur(l), comp);
            if (c != 0) out.add(l, c);
        }
    }
    return out;
}

}  // namespace schurw
