#include "schurw/identities.hpp"

#include <stdexcept>

#include "schurw/tau.hpp"

namespace schurw {

Rational apply_D(const DWord& word, const IntVector& mu) {
    IntVector label = mu;
    Rational denom(1);
    // rightmost factor acts first; the i-th divisor is read off the
    // current label before the shift
    for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
        auto [idx, count] = *it;
        if (idx < 0 || idx >= static_cast<int>(label.size()))
            throw std::invalid_argument("D index outside label length");
        if (count < 1) throw std::invalid_argument("D count must be >= 1");
        for (int c = 0; c < count; ++c) {
            long div = label[idx] - 1;
            if (div == 0)
                throw std::domain_error("apply_D hit a zero denominator");
            denom *= div;
            label[idx] -= 2;
        }
    }
    Rational r = A_coeff(label);
    if (r == 0) return r;
    r /= denom;
    r.canonicalize();
    return r;
}

Rational DA(const IntVector& lambda) {
    Rational total(0);
    for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
        total += apply_D({{{i, 1}}}, lambda);
    return total;
}

Rational D2A(const IntVector& lambda) {
    Rational total(0);
    const int l = static_cast<int>(lambda.size());
    for (int a = 0; a < l; ++a)
        for (int b = 0; b < l; ++b)
            total += apply_D({{{a, 1}, {b, 1}}}, lambda);
    return total;
}

Rational phi(const IntVector& mu) {
    const int l = static_cast<int>(mu.size());
    IntVector two = mu;
    for (int& x : two) x *= 2;
    Rational total = rat(3 * weight(mu)) * A_coeff(two);
    for (int i = 0; i < l; ++i) {
        Rational c = rat(-6L * (2L * mu[i] - 1) * (2L * mu[i] - 5));
        if (c != 0) total += c * apply_D({{{i, 3}}}, two);
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            total += rat(24) * apply_D({{{i, 2}, {j, 1}}}, two);
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                if (i == j || j == k || i == k) continue;
                total += rat(8) * apply_D({{{i, 1}, {j, 1}, {k, 1}}}, two);
            }
    return total;
}

namespace {

IntVector doubled_pair(const IntVector& nu, int i, int j) {
    return {2 * nu[i], 2 * nu[j]};
}

IntVector doubled_rest(const IntVector& nu, int i, int j) {
    IntVector rest = erase_components(nu, {i, j});
    for (int& x : rest) x *= 2;
    return rest;
}

}  // namespace

Rational gamma_sum(const IntVector& nu) {
    const int l = static_cast<int>(nu.size());
    if (l < 4 || l % 2 != 0)
        throw std::invalid_argument("gamma needs even length >= 4");
    Rational total(0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            // (-1)^{i+j+delta_{j>i}} with 1-based indices
            int sign = parity_sign(i + j + (j > i ? 1 : 0));
            Rational pairv = DA(doubled_pair(nu, i, j));
            if (pairv == 0) continue;
            total += Rational(sign) * pairv * DA(doubled_rest(nu, i, j));
        }
    return total;
}

Rational psi_sum(const IntVector& nu) {
    const int l = static_cast<int>(nu.size());
    if (l < 4 || l % 2 != 0)
        throw std::invalid_argument("psi needs even length >= 4");
    Rational total(0);
    for (int i = 0; i + 1 < l; ++i) {
        int sign = parity_sign(i);  // (-1)^{i+1} with 1-based i
        IntVector pair = doubled_pair(nu, i, l - 1);
        IntVector rest = doubled_rest(nu, i, l - 1);
        total += Rational(sign) *
                 (DA(pair) * D2A(rest) + D2A(pair) * DA(rest));
    }
    return total;
}

std::pair<Rational, Rational> dexp_last(const IntVector& nu) {
    const int l = static_cast<int>(nu.size());
    IntVector two = nu;
    for (int& x : two) x *= 2;
    Rational rhs(0);
    for (int j = 0; j + 1 < l; ++j) {
        int sign = parity_sign(j);
        IntVector pair = doubled_pair(nu, j, l - 1);
        IntVector rest = doubled_rest(nu, j, l - 1);
        rhs += Rational(sign) *
               (A_coeff(pair) * DA(rest) + DA(pair) * A_coeff(rest));
    }
    return {DA(two), rhs};
}

std::pair<Rational, Rational> dexp_last2(const IntVector& nu) {
    const int l = static_cast<int>(nu.size());
    IntVector two = nu;
    for (int& x : two) x *= 2;
    Rational rhs(0);
    for (int j = 0; j + 1 < l; ++j) {
        int sign = parity_sign(j);
        IntVector pair = doubled_pair(nu, j, l - 1);
        IntVector rest = doubled_rest(nu, j, l - 1);
        rhs += Rational(sign) *
               (D2A(pair) * A_coeff(rest) + 2 * DA(pair) * DA(rest) +
                A_coeff(pair) * D2A(rest));
    }
    return {D2A(two), rhs};
}

std::pair<Rational, Rational> dexp_symmetric(const IntVector& nu) {
    const int l = static_cast<int>(nu.size());
    IntVector two = nu;
    for (int& x : two) x *= 2;
    Rational rhs(0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            int sign = parity_sign(i + j + (i < j ? 1 : 0));
            rhs += Rational(sign) * DA(doubled_pair(nu, i, j)) *
                   A_coeff(doubled_rest(nu, i, j));
        }
    rhs /= 2;
    return {DA(two), rhs};
}

std::pair<Rational, Rational> dexp_symmetric2(const IntVector& nu) {
    const int l = static_cast<int>(nu.size());
    IntVector two = nu;
    for (int& x : two) x *= 2;
    Rational rhs(0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            int sign = parity_sign(i + j + (i < j ? 1 : 0));
            IntVector pair = doubled_pair(nu, i, j);
            IntVector rest = doubled_rest(nu, i, j);
            rhs += Rational(sign) *
                   (D2A(pair) * A_coeff(rest) + DA(pair) * DA(rest));
        }
    rhs /= 2;
    return {D2A(two), rhs};
}

HookVerdict check_hook_lemma(const IntVector& lambda, int n, int m) {
    if (n > 0 || m < 0)
        throw std::invalid_argument("hook lemma needs n <= 0 and m >= 0");
    IntVector ext = lambda;
    ext.push_back(n);
    for (int j = 0; j < m; ++j) ext.push_back(1);
    Poly lhs = schur(ext);
    Poly rhs;
    if (m == -n) rhs = schur(lambda).scale(rat(parity_sign(m)));
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
}

LinComb bstar_on_schur_closed(int n, const IntVector& lambda) {
    const int l = static_cast<int>(lambda.size());
    LinComb out(Basis::Schur);
    if (n <= -l) {
        IntVector ext = lambda;
        for (int& x : ext) x += 1;
        for (int j = 0; j < -n - l; ++j) ext.push_back(1);
        out.add_scaled(straighten_schur(ext), rat(parity_sign(n)));
    }
    for (int i = 1; i <= l; ++i) {
        if (lambda[i - 1] != n + i - 1) continue;
        IntVector rest;
        rest.reserve(l - 1);
        for (int j = 0; j < l; ++j)
            if (j != i - 1) rest.push_back(lambda[j]);
        for (int j = 0; j < i - 1; ++j) rest[j] += 1;
        out.add_scaled(straighten_schur(rest), rat(parity_sign(i - 1)));
    }
    return out;
}

LinComb wkw_perp_closed(const IntVector& mu) {
    const int l = static_cast<int>(mu.size());
    LinComb out(Basis::Q);
    for (int i = 0; i < l; ++i) {
        Rational c = rat((2L * mu[i] - 1) * (2L * mu[i] - 5), 24);
        if (c == 0) continue;
        IntVector v = mu;
        v[i] -= 3;
        out.add_scaled(straighten_q(v), c);
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            IntVector v = mu;
            v[i] -= 2;
            v[j] -= 1;
            out.add_scaled(straighten_q(v), rat(-1, 6));
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                if (i == j || j == k || i == k) continue;
                IntVector v = mu;
                v[i] -= 1;
                v[j] -= 1;
                v[k] -= 1;
                out.add_scaled(straighten_q(v), rat(-1, 18));
            }
    return out;
}

}  // namespace schurw
