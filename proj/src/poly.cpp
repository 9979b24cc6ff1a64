#include "schurw/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurw {

Monomial::Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    std::vector<Entry> merged;
    merged.reserve(e_.size());
    for (const auto& [n, e] : e_) {
        if (n < 1) throw std::invalid_argument("variable index must be >= 1");
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == n)
            merged.back().second += e;
        else
            merged.emplace_back(n, e);
    }
    e_ = std::move(merged);
}

Monomial Monomial::var(int n, int exp) {
    Monomial m;
    if (n < 1) throw std::invalid_argument("variable index must be >= 1");
    if (exp > 0) m.e_.emplace_back(n, exp);
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (const auto& [n, e] : e_) d += static_cast<long>(n) * e;
    return d;
}

int Monomial::exponent(int n) const {
    for (const auto& [v, e] : e_)
        if (v == n) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first)
            r.e_.push_back(*a++);
        else if (b->first < a->first)
            r.e_.push_back(*b++);
        else {
            r.e_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    r.e_.insert(r.e_.end(), b, o.e_.end());
    return r;
}

Monomial Monomial::without_one(int n) const {
    Monomial r;
    r.e_.reserve(e_.size());
    for (const auto& [v, e] : e_) {
        if (v == n) {
            if (e > 1) r.e_.emplace_back(v, e - 1);
        } else {
            r.e_.emplace_back(v, e);
        }
    }
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    const std::size_t n = std::min(e_.size(), o.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (e_[i].first != o.e_[i].first) return e_[i].first < o.e_[i].first;
        if (e_[i].second != o.e_[i].second) return e_[i].second > o.e_[i].second;
    }
    return e_.size() < o.e_.size();
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [n, e] : e_) {
        h ^= static_cast<std::size_t>(n) * 1099511628211ull;
        h *= 1099511628211ull;
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

Poly::Poly(Rational c) {
    if (c != 0) terms_.emplace(Monomial(), std::move(c));
}

Poly Poly::var(int n) {
    Poly p;
    p.terms_.emplace(Monomial::var(n), Rational(1));
    return p;
}

long Poly::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        if (d == -1)
            d = m.degree();
        else if (m.degree() != d)
            return false;
    }
    return true;
}

bool Poly::odd_support_only() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [n, e] : m.entries())
            if (n % 2 == 0) return false;
    return true;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const { return mul(*this, o); }

Poly Poly::scale(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

void Poly::scale_in_place(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, v] : terms_) v *= c;
}

void Poly::add_scaled(const Poly& o, const Rational& c) {
    if (c == 0) return;
    for (const auto& [m, v] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, v * c);
        if (!fresh) {
            it->second += v * c;
            if (it->second == 0) terms_.erase(it);
        }
    }
}

Poly Poly::partial(int n) const {
    if (n < 1) throw std::invalid_argument("variable index must be >= 1");
    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(n);
        if (e == 0) continue;
        r.terms_.emplace(m.without_one(n), c * e);
    }
    return r;
}

Poly Poly::mul_var(int n) const {
    if (n < 1) throw std::invalid_argument("variable index must be >= 1");
    Poly r;
    Monomial tn = Monomial::var(n);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * tn, c);
    return r;
}

Poly Poly::homogeneous_component(long d) const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

std::vector<long> Poly::degrees_present() const {
    std::vector<long> ds;
    for (const auto& [m, c] : terms_) {
        long d = m.degree();
        if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Rational Poly::evaluate(const VarAssignment& a) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        bool dead = false;
        for (const auto& [n, e] : m.entries()) {
            auto it = a.find(n);
            if (it == a.end() || it->second == 0) {
                dead = true;
                break;
            }
            v *= rat_pow(it->second, e);
        }
        if (!dead) total += v;
    }
    return total;
}

void Poly::insert_term(Monomial m, Rational c) {
    if (c == 0) return;
    terms_.emplace(std::move(m), std::move(c));
}

void PolyBuilder::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = acc_.try_emplace(m, c);
    if (!fresh) it->second += c;
}

void PolyBuilder::add_product(const Monomial& a, const Rational& ca,
                              const Monomial& b, const Rational& cb) {
    add(a * b, ca * cb);
}

void PolyBuilder::add_poly(const Poly& p, const Rational& c) {
    if (c == 0) return;
    for (const auto& [m, v] : p.terms()) add(m, v * c);
}

void PolyBuilder::add_poly(const Poly& p) {
    for (const auto& [m, v] : p.terms()) add(m, v);
}

void PolyBuilder::add_product_poly(const Poly& a, const Poly& b,
                                   const Rational& c) {
    if (c == 0) return;
    for (const auto& [ma, ca] : a.terms()) {
        Rational cac = ca * c;
        for (const auto& [mb, cb] : b.terms()) add(ma * mb, cac * cb);
    }
}

Poly PolyBuilder::build() {
    Poly p;
    for (auto& [m, c] : acc_)
        if (c != 0) p.terms_.emplace(m, std::move(c));
    acc_.clear();
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    PolyBuilder builder;
    builder.add_product_poly(a, b, Rational(1));
    return builder.build();
}

}  // namespace schurw
