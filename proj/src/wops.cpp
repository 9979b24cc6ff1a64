#include "schurw/wops.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurw {

Integer falling(long n, long k) {
    if (k < 0) throw std::invalid_argument("falling factorial needs k >= 0");
    Integer r(1);
    for (long j = 0; j < k; ++j) r *= Integer(n - j);
    return r;
}

Rational binom_int(long n, long k) {
    Rational r(falling(n, k));
    r /= Rational(factorial(static_cast<unsigned long>(k)));
    r.canonicalize();
    return r;
}

Rational coeff_d(long k, long n) {
    if (k < 1) throw std::invalid_argument("coeff_d needs k >= 1");
    // d_k(n) = k! (-1)^{k-1} / 2^k * sum_{j=0}^{k-1} (-2)^j binom(n, j)
    Rational sum(0);
    Rational pow(1);
    for (long j = 0; j < k; ++j) {
        sum += pow * binom_int(n, j);
        pow *= -2;
    }
    Rational lead(factorial(static_cast<unsigned long>(k)) * parity_sign(k - 1),
                  int_pow(2, static_cast<unsigned long>(k)));
    lead.canonicalize();
    return lead * sum;
}

Rational coeff_c(long k, long m, long n) {
    return 2 * coeff_d(k, n - m) - 2 * parity_sign(m) * coeff_d(k, -n);
}

namespace {

Rational h_like(long k, long b, const Rational& rho, long shift) {
    // sum_{j=0}^{k-1} rho^j / (1-rho)^{j+1} * binom(b, k - shift - j)
    Rational one_minus = Rational(1) - rho;
    Rational sum(0);
    Rational rho_pow(1);
    Rational denom = one_minus;
    for (long j = 0; j < k; ++j) {
        long top = k - shift - j;
        if (top >= 0) sum += rho_pow / denom * binom_int(b, top);
        rho_pow *= rho;
        denom *= one_minus;
    }
    return Rational(factorial(static_cast<unsigned long>(k))) * sum;
}

}  // namespace

Rational coeff_h(long k, long b, const RhoParam& rho) {
    if (k < 1) throw std::invalid_argument("coeff_h needs k >= 1");
    return h_like(k, b, rho.value, 0);
}

Rational coeff_g(long k, long b, const RhoParam& rho) {
    if (k < 1) throw std::invalid_argument("coeff_g needs k >= 1");
    return -h_like(k, b, rho.value, 1);
}

// ---------------------------------------------------------------------------
// Star products and the vertex-sum evaluator.

Poly star_schur(int a, int b, const Poly& p) {
    Poly r = apply_Bstar(a, apply_B(b, p, rho_schur()), rho_schur());
    if (a == b && b >= 0) r -= p;
    return r;
}

Poly star_q(int a, int b, const Poly& p) {
    Poly r = apply_B(a, apply_B(b, p, rho_q()), rho_q());
    if (a == -b && b >= 0) r.add_scaled(p, rat(-2 * parity_sign(b)));
    return r;
}

PBrute::PBrute(Poly p, const RhoParam& rho) : p_(std::move(p)), rho_(rho.value) {
    if (rho_ != 0 && rho_ != -1)
        throw std::domain_error(
            "vertex-sum evaluation requires rho in {0, -1}");
    if (rho_ == -1 && !p_.odd_support_only())
        throw std::domain_error(
            "rho = -1 operators act on odd-indexed variables only");
    deg_ = std::max<long>(p_.degree(), 0);
    if (!p_.is_zero()) p_low_ = lower_family(p_);
}

const Poly& PBrute::intermediate(int b) {
    auto it = wb_.find(b);
    if (it == wb_.end())
        it = wb_.emplace(b, apply_B_from_family(b, p_low_, rho_)).first;
    return it->second;
}

const std::vector<Poly>& PBrute::intermediate_family(int b) {
    auto it = wb_fam_.find(b);
    if (it == wb_fam_.end()) {
        const Poly& w = intermediate(b);
        it = wb_fam_
                 .emplace(b, rho_ == 0 ? raise_family(w) : lower_family(w))
                 .first;
    }
    return it->second;
}

const Poly& PBrute::star(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = star_cache_.find(key);
    if (it != star_cache_.end()) return it->second;
    Poly r;
    const Poly& w = intermediate(b);
    if (!w.is_zero()) {
        const auto& fam = intermediate_family(b);
        r = rho_ == 0 ? apply_Bstar_from_family(a, fam, rho_)
                      : apply_B_from_family(a, fam, rho_);
    }
    if (rho_ == 0) {
        if (a == b && b >= 0) r -= p_;
    } else {
        if (a == -b && b >= 0) r.add_scaled(p_, rat(-2 * parity_sign(b)));
    }
    return star_cache_.emplace(key, std::move(r)).first->second;
}

Poly PBrute::apply(long k, long m) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (k == 0) return m == 0 ? p_ : Poly();
    if (p_.is_zero()) return Poly();
    Poly acc;
    long labs = m < 0 ? -m : m;
    for (long b = -deg_; b <= deg_ + labs + k; ++b) {
        Rational coeff;
        int a;
        if (rho_ == 0) {
            a = static_cast<int>(b + m);
            coeff = coeff_g(k, b, rho_schur());
        } else {
            a = static_cast<int>(-m - b);
            coeff = coeff_d(k, b) * parity_sign(a + 1);
        }
        if (coeff == 0) continue;
        acc.add_scaled(star(a, static_cast<int>(b)), coeff);
    }
    if (m == 0 && rho_ == -1) {
        Rational c(factorial(static_cast<unsigned long>(k)) * parity_sign(k),
                   int_pow(2, static_cast<unsigned long>(k)));
        c.canonicalize();
        acc.add_scaled(p_, c);
    }
    return acc;
}

Poly apply_P_brute(const OpSpec& spec, const Poly& p) {
    PBrute evaluator(p, spec.rho);
    return evaluator.apply(spec.k, spec.m);
}

// ---------------------------------------------------------------------------
// Mode sums. J(z) = sum_j J_j z^{-j-1} with J_{-n} = (1-rho^n) n t_n,
// J_n = d/dt_n for n >= 1 and J_0 = 0.

Poly apply_J_mode(long m, const RhoParam& rho, const Poly& p) {
    if (m == 0) return Poly();
    if (m > 0) return p.partial(static_cast<int>(m));
    long n = -m;
    Rational c = (Rational(1) - rat_pow(rho.value, n)) * n;
    if (c == 0) return Poly();
    return p.mul_var(static_cast<int>(n)).scale(c);
}

Poly quadratic_modes(long m, const RhoParam& rho, const Poly& p) {
    long deg = p.degree();
    if (deg < 0) return Poly();
    Poly acc;
    // both modes derivations: (i, m-i), 1 <= i <= m-1
    for (long i = 1; i < m; ++i) {
        if (i > deg || m - i > deg) continue;
        acc += p.partial(static_cast<int>(m - i)).partial(static_cast<int>(i));
    }
    // one multiplication t_u, one derivation d_{m+u}; ordered pairs count 2
    for (long u = std::max<long>(1, 1 - m); m + u <= deg; ++u) {
        Rational c = (Rational(1) - rat_pow(rho.value, u)) * u * 2;
        if (c == 0) continue;
        acc.add_scaled(
            p.partial(static_cast<int>(m + u)).mul_var(static_cast<int>(u)), c);
    }
    // both multiplications: t_u t_{-m-u}
    for (long u = 1; u <= -m - 1; ++u) {
        long v = -m - u;
        Rational c = (Rational(1) - rat_pow(rho.value, u)) * u *
                     (Rational(1) - rat_pow(rho.value, v)) * v;
        if (c == 0) continue;
        acc.add_scaled(
            p.mul_var(static_cast<int>(u)).mul_var(static_cast<int>(v)), c);
    }
    return acc;
}

namespace {

// Multiplicity factor 3! / (sym(S) sym(T)) for the ordered triple count
// of a derivative multiset S and multiplication multiset T.
long triple_arrangements(const std::vector<long>& s, const std::vector<long>& t) {
    long denom = 1;
    auto count_sym = [&denom](const std::vector<long>& v) {
        long run = 1;
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] == v[i - 1])
                ++run;
            else
                run = 1;
            if (run == 2) denom *= 2;
            if (run == 3) denom *= 3;
        }
    };
    count_sym(s);
    count_sym(t);
    return 6 / denom;
}

}  // namespace

Poly cubic_modes(long m, const RhoParam& rho, const Poly& p) {
    long deg = p.degree();
    if (deg < 0) return Poly();
    Poly acc;
    std::map<std::vector<long>, Poly> deriv_cache;
    auto derived = [&](const std::vector<long>& s) -> const Poly& {
        auto it = deriv_cache.find(s);
        if (it == deriv_cache.end()) {
            Poly q = p;
            for (long idx : s) q = q.partial(static_cast<int>(idx));
            it = deriv_cache.emplace(s, std::move(q)).first;
        }
        return it->second;
    };
    auto mode_coeff = [&](long u) -> Rational {
        return (Rational(1) - rat_pow(rho.value, u)) * u;
    };

    // nd = number of derivative modes in the normal-ordered product
    for (int nd = 0; nd <= 3; ++nd) {
        int nt = 3 - nd;
        // enumerate derivative multisets s1 <= ... <= s_nd with sum <= deg
        std::vector<long> stack;
        auto emit = [&](const std::vector<long>& sset) {
            long ssum = 0;
            for (long v : sset) ssum += v;
            long tsum = ssum - m;
            if (nt == 0 && tsum != 0) return;
            if (nt > 0 && tsum < nt) return;
            const Poly& dp = derived(sset);
            if (dp.is_zero()) return;
            // enumerate multiplication multisets t1 <= ... <= t_nt summing to tsum
            std::vector<long> tset;
            auto rec_t = [&](auto&& self, long lo, long remaining, int slots) -> void {
                if (slots == 0) {
                    if (remaining != 0) return;
                    Rational c(triple_arrangements(sset, tset));
                    for (long u : tset) c *= mode_coeff(u);
                    if (c == 0) return;
                    Poly q = dp;
                    for (long u : tset) q = q.mul_var(static_cast<int>(u));
                    acc.add_scaled(q, c);
                    return;
                }
                for (long u = lo; u * slots <= remaining; ++u) {
                    tset.push_back(u);
                    self(self, u, remaining - u, slots - 1);
                    tset.pop_back();
                }
            };
            rec_t(rec_t, 1, tsum, nt);
        };
        auto rec_s = [&](auto&& self, long lo, long remaining, int slots) -> void {
            if (slots == 0) {
                emit(stack);
                return;
            }
            for (long v = lo; v <= remaining; ++v) {
                stack.push_back(v);
                self(self, v, remaining - v, slots - 1);
                stack.pop_back();
            }
        };
        rec_s(rec_s, 1, deg, nd);
    }
    return acc;
}

Poly apply_P_modes(const OpSpec& spec, const Poly& p) {
    long k = spec.k;
    long m = spec.m;
    if (k < 0 || k > 3)
        throw std::invalid_argument("mode formulas are maintained for k <= 3");
    if (k == 0) return m == 0 ? p : Poly();
    Poly jm = apply_J_mode(m, spec.rho, p);
    if (k == 1) return jm;
    Poly quad = quadratic_modes(m, spec.rho, p);
    if (k == 2) {
        quad.add_scaled(jm, rat(-(m + 1)));
        return quad;
    }
    // P^(3) = :J^3: + (3/2) dz :J^2: + dz^2 J, mode-extracted at z^{-m-3}
    Poly cub = cubic_modes(m, spec.rho, p);
    cub.add_scaled(quad, rat(-3 * (m + 2), 2));
    cub.add_scaled(jm, rat((m + 1) * (m + 2)));
    return cub;
}

// ---------------------------------------------------------------------------
// Closed actions.

LinComb apply_P_closed_q(long k, long m, const IntVector& lambda) {
    if (k < 1) throw std::invalid_argument("closed action needs k >= 1");
    LinComb out(Basis::Q);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        Rational c = coeff_c(k, m, lambda[i]);
        if (c == 0) continue;
        IntVector shifted = lambda;
        shifted[i] -= static_cast<int>(m);
        out.add_scaled(straighten_q(shifted), c);
    }
    if (m < 0) {
        for (long a = 0; a <= -m; ++a) {
            Rational c = coeff_d(k, a) * parity_sign(m - a);
            if (c == 0) continue;
            IntVector ext = lambda;
            ext.push_back(static_cast<int>(a));
            ext.push_back(static_cast<int>(-m - a));
            out.add_scaled(straighten_q(ext), c);
        }
    }
    return out;
}

LinComb apply_P_closed_s(long k, long m, const IntVector& lambda) {
    if (k < 1) throw std::invalid_argument("closed action needs k >= 1");
    const long l = static_cast<long>(lambda.size());
    LinComb out(Basis::Schur);
    for (long i = 1; i <= l; ++i) {
        Rational c = Rational(falling(lambda[i - 1] - m - i, k - 1)) * k;
        if (c == 0) continue;
        IntVector shifted = lambda;
        shifted[i - 1] -= static_cast<int>(m);
        out.add_scaled(straighten_schur(shifted), c);
    }
    if (m == 0) out.add_scaled(straighten_schur(lambda), Rational(falling(-l, k)));
    if (m < 0) {
        for (long n = 1; n <= -m; ++n) {
            Rational c =
                Rational(falling(n - l - 1, k - 1)) * k * parity_sign(m - n);
            if (c == 0) continue;
            IntVector ext = lambda;
            ext.push_back(static_cast<int>(n));
            for (long j = 0; j < -m - n; ++j) ext.push_back(1);
            out.add_scaled(straighten_schur(ext), c);
        }
    }
    return out;
}

LinComb apply_P_closed_lc(long k, long m, const LinComb& in) {
    LinComb out(in.basis);
    for (const auto& [label, c] : in.terms) {
        LinComb piece = in.basis == Basis::Q ? apply_P_closed_q(k, m, label)
                                             : apply_P_closed_s(k, m, label);
        out.add_scaled(piece, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named operators.

void NamedOp::validate() const {
    switch (kind) {
        case NamedKind::What:
            if (m % 2 == 0)
                throw std::invalid_argument("What requires odd m");
            break;
        case NamedKind::Nhat:
            if (m % 2 != 0)
                throw std::invalid_argument("Nhat requires even m");
            break;
        default:
            break;
    }
}

bool NamedOp::takes_m() const {
    switch (kind) {
        case NamedKind::L:
        case NamedKind::Lhat:
        case NamedKind::W:
        case NamedKind::What:
        case NamedKind::Nhat:
            return true;
        default:
            return false;
    }
}

bool NamedOp::hatted() const {
    switch (kind) {
        case NamedKind::L:
        case NamedKind::W:
        case NamedKind::W0:
            return false;
        default:
            return true;
    }
}

std::string NamedOp::name() const {
    switch (kind) {
        case NamedKind::L: return "L";
        case NamedKind::Lhat: return "Lhat";
        case NamedKind::W: return "W";
        case NamedKind::What: return "What";
        case NamedKind::Nhat: return "Nhat";
        case NamedKind::W0: return "W0";
        case NamedKind::WBGW: return "WBGW";
        case NamedKind::WKW: return "WKW";
        case NamedKind::WKWperp: return "WKWperp";
        case NamedKind::What3: return "What3";
    }
    return "?";
}

NamedOp named_op_from_string(const std::string& name, long m) {
    NamedOp op{NamedKind::L, m};
    if (name == "L") op.kind = NamedKind::L;
    else if (name == "Lhat") op.kind = NamedKind::Lhat;
    else if (name == "W") op.kind = NamedKind::W;
    else if (name == "What") op.kind = NamedKind::What;
    else if (name == "Nhat") op.kind = NamedKind::Nhat;
    else if (name == "W0") op.kind = NamedKind::W0;
    else if (name == "WBGW") op.kind = NamedKind::WBGW;
    else if (name == "WKW") op.kind = NamedKind::WKW;
    else if (name == "WKWperp") op.kind = NamedKind::WKWperp;
    else if (name == "What3") op.kind = NamedKind::What3;
    else throw std::invalid_argument("unknown operator name: " + name);
    op.validate();
    return op;
}

namespace {

// Virasoro displays, truncated against deg p.
Poly virasoro_modes(long m, bool hatted, const Poly& p) {
    long deg = p.degree();
    if (deg < 0) return Poly();
    long step = hatted ? 2 * m : m;
    Poly acc;
    for (long a = 1; a + step <= deg; a += hatted ? 2 : 1) {
        if (a <= -step) continue;
        Poly q = p.partial(static_cast<int>(a + step));
        if (q.is_zero()) continue;
        acc.add_scaled(q.mul_var(static_cast<int>(a)),
                       rat(hatted ? 2 * a : a));
    }
    if (m > 0) {
        for (long kk = 1; kk <= step - 1; kk += hatted ? 2 : 1) {
            Poly q = p.partial(static_cast<int>(step - kk))
                         .partial(static_cast<int>(kk));
            acc.add_scaled(q, rat(1, 2));
        }
    }
    if (m < 0) {
        for (long kk = 1; kk <= -step - 1; kk += hatted ? 2 : 1) {
            Rational c = rat(kk * (-step - kk));
            c *= hatted ? rat(2) : rat(1, 2);
            acc.add_scaled(p.mul_var(static_cast<int>(kk))
                               .mul_var(static_cast<int>(-step - kk)),
                           c);
        }
    }
    return acc;
}

Poly t1_cubed(const Poly& p) { return p.mul_var(1).mul_var(1).mul_var(1); }

}  // namespace

Poly apply_named(const NamedOp& op, const Poly& p) {
    op.validate();
    if (op.hatted() && !p.odd_support_only())
        throw std::domain_error(op.name() +
                                " acts on odd-indexed variables only");
    switch (op.kind) {
        case NamedKind::L:
            return virasoro_modes(op.m, false, p);
        case NamedKind::Lhat:
            return virasoro_modes(op.m, true, p);
        case NamedKind::W:
            return cubic_modes(op.m, rho_schur(), p).scale(rat(1, 3));
        case NamedKind::W0:
            return cubic_modes(0, rho_schur(), p).scale(rat(1, 3));
        case NamedKind::What:
            return cubic_modes(op.m, rho_q(), p).scale(rat(1, 3));
        case NamedKind::What3:
            return cubic_modes(3, rho_q(), p).scale(rat(1, 3));
        case NamedKind::WBGW: {
            Poly r = apply_named({NamedKind::What, -1}, p).scale(rat(1, 4));
            r.add_scaled(p.mul_var(1), rat(1, 8));
            return r;
        }
        case NamedKind::WKW: {
            Poly r = apply_named({NamedKind::What, -3}, p).scale(rat(1, 12));
            r.add_scaled(t1_cubed(p), rat(-1, 18));
            r.add_scaled(p.mul_var(3), rat(1, 8));
            return r;
        }
        case NamedKind::WKWperp: {
            Poly r = apply_named({NamedKind::What, 3}, p).scale(rat(1, 12));
            r.add_scaled(p.partial(1).partial(1).partial(1), rat(-1, 144));
            r.add_scaled(p.partial(3), rat(1, 48));
            return r;
        }
        case NamedKind::Nhat: {
            // N_m = 1/4 (P4_m + 2(m+3) P3_m + (m+2)(m+3) P2_m); the
            // prefactors come from dz z^{-j-c} = (-j-c) z^{-j-c-1}.
            PBrute ev(p, rho_q());
            Poly r = ev.apply(4, op.m);
            r.add_scaled(ev.apply(3, op.m), rat(2 * (op.m + 3)));
            r.add_scaled(ev.apply(2, op.m), rat((op.m + 2) * (op.m + 3)));
            return r.scale(rat(1, 4));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

LinComb closed_what(long m, const IntVector& lambda) {
    LinComb r = apply_P_closed_q(3, m, lambda).scaled(rat(1, 3));
    r.add_scaled(apply_P_closed_q(2, m, lambda), rat(m + 2, 2));
    r.add_scaled(apply_P_closed_q(1, m, lambda), rat((m + 1) * (m + 2), 6));
    return r;
}

LinComb closed_w(long m, const IntVector& lambda) {
    LinComb r = apply_P_closed_s(3, m, lambda).scaled(rat(1, 3));
    r.add_scaled(apply_P_closed_s(2, m, lambda), rat(m + 2, 2));
    r.add_scaled(apply_P_closed_s(1, m, lambda), rat((m + 1) * (m + 2), 6));
    return r;
}

LinComb closed_what_lc(long m, const LinComb& in) {
    LinComb out(Basis::Q);
    for (const auto& [label, c] : in.terms)
        out.add_scaled(closed_what(m, label), c);
    return out;
}

// (1/2 P1_j)^3 etc. need iterated closed k=1 actions.
LinComb iterate_closed_p1(long m, int times, const IntVector& lambda) {
    LinComb acc(Basis::Q);
    acc.add_scaled(straighten_q(lambda), Rational(1));
    for (int i = 0; i < times; ++i) acc = apply_P_closed_lc(1, m, acc);
    return acc;
}

}  // namespace

LinComb closed_action_named(const NamedOp& op, const IntVector& lambda) {
    op.validate();
    switch (op.kind) {
        case NamedKind::L: {
            LinComb r = apply_P_closed_s(2, op.m, lambda).scaled(rat(1, 2));
            r.add_scaled(apply_P_closed_s(1, op.m, lambda), rat(op.m + 1, 2));
            return r;
        }
        case NamedKind::Lhat:
            return apply_P_closed_q(2, 2 * op.m, lambda).scaled(rat(1, 2));
        case NamedKind::W:
            return closed_w(op.m, lambda);
        case NamedKind::W0:
            return closed_w(0, lambda);
        case NamedKind::What:
            return closed_what(op.m, lambda);
        case NamedKind::What3:
            return closed_what(3, lambda);
        case NamedKind::Nhat: {
            LinComb r = apply_P_closed_q(4, op.m, lambda).scaled(rat(1, 4));
            r.add_scaled(apply_P_closed_q(3, op.m, lambda), rat(op.m + 3, 2));
            r.add_scaled(apply_P_closed_q(2, op.m, lambda),
                         rat((op.m + 2) * (op.m + 3), 4));
            return r;
        }
        case NamedKind::WBGW: {
            // 1/4 What_{-1} + 1/8 t_1 with t_1 = 1/2 P1_{-1}
            LinComb r = closed_what(-1, lambda).scaled(rat(1, 4));
            r.add_scaled(apply_P_closed_q(1, -1, lambda), rat(1, 16));
            return r;
        }
        case NamedKind::WKW: {
            // 1/12 What_{-3} - 1/18 t_1^3 + 1/8 t_3
            LinComb r = closed_what(-3, lambda).scaled(rat(1, 12));
            r.add_scaled(iterate_closed_p1(-1, 3, lambda), rat(-1, 144));
            r.add_scaled(apply_P_closed_q(1, -3, lambda), rat(1, 48));
            return r;
        }
        case NamedKind::WKWperp: {
            // 1/12 What_3 - 1/144 d1^3 + 1/48 d3
            LinComb r = closed_what(3, lambda).scaled(rat(1, 12));
            r.add_scaled(iterate_closed_p1(1, 3, lambda), rat(-1, 144));
            r.add_scaled(apply_P_closed_q(1, 3, lambda), rat(1, 48));
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

LinComb closed_action_named_lc(const NamedOp& op, const LinComb& in) {
    LinComb out(op.basis());
    for (const auto& [label, c] : in.terms)
        out.add_scaled(closed_action_named(op, label), c);
    return out;
}

}  // namespace schurw
