#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schurw/rational.hpp"

namespace schurw {

// Monomial in the graded variables t_1, t_2, ... with deg t_n = n.
// Stored as (variable index, exponent) pairs sorted by index, no zero
// exponents. The comparison below is the deterministic term order used
// for canonical serialization: earlier variable first, then higher
// exponent, then shorter monomial.
class Monomial {
  public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);

    static Monomial var(int n, int exp = 1);

    const std::vector<Entry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    long degree() const;
    int exponent(int n) const;

    Monomial operator*(const Monomial& o) const;
    // Divides out one power of t_n; caller must ensure exponent(n) > 0.
    Monomial without_one(int n) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const;

    std::size_t hash() const;

  private:
    std::vector<Entry> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Variable assignment for evaluation; unlisted variables are 0.
using VarAssignment = std::map<int, Rational>;

// Sparse polynomial over the rationals, canonical form (no zero
// coefficients, ordered term map). Equality is term-map equality.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(Rational c);

    static Poly var(int n);
    static Poly constant(const Rational& c) { return Poly(c); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Max graded degree over terms; -1 for the zero polynomial.
    long degree() const;
    bool is_homogeneous() const;
    // True when no even-indexed variable occurs.
    bool odd_support_only() const;

    Rational coeff(const Monomial& m) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly scale(const Rational& c) const;
    void scale_in_place(const Rational& c);
    void add_scaled(const Poly& o, const Rational& c);

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return terms_ != o.terms_; }

    // d/dt_n, multiplication by t_n, coefficient extraction.
    Poly partial(int n) const;
    Poly mul_var(int n) const;
    Poly homogeneous_component(long d) const;
    std::vector<long> degrees_present() const;

    Rational evaluate(const VarAssignment& a) const;

    // Adds a fresh term; the monomial must not be present already.
    void insert_term(Monomial m, Rational c);

  private:
    friend class PolyBuilder;
    TermMap terms_;
};

// Accumulator for convolution-style sums; hash-map based, converted to
// the canonical ordered form once at the end.
class PolyBuilder {
  public:
    void add(const Monomial& m, const Rational& c);
    void add_product(const Monomial& a, const Rational& ca, const Monomial& b,
                     const Rational& cb);
    void add_poly(const Poly& p, const Rational& c);
    void add_poly(const Poly& p);
    // acc += c * a * b
    void add_product_poly(const Poly& a, const Poly& b, const Rational& c);
    Poly build();

  private:
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

Poly mul(const Poly& a, const Poly& b);

}  // namespace schurw
