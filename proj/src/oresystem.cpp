#include "orelim/oresystem.hpp"

#include <cctype>
#include <random>

namespace orelim {

namespace {

Poly h_plus(const Rational& delta, int power) {
    // (t + delta)^power as a polynomial, later read with t = H
    return (Poly::monomial(1) + Poly(delta)).pow(power);
}

}  // namespace

OreElem check_compatible(const OreElem& a, const OreElem& b) {
    if (a.structure_constant() != b.structure_constant())
        throw AlgebraMismatchError("operands live in different Ore algebras (c mismatch)");
    return a;
}

void OreElem::add_term(int e, const Poly& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, q);
    } else {
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OreElem OreElem::scalar(const Rational& c, const Rational& v) {
    OreElem m(c);
    m.add_term(0, Poly(v));
    return m;
}

OreElem OreElem::E(const Rational& c, int power) {
    OreElem m(c);
    m.add_term(power, Poly(1));
    return m;
}

OreElem OreElem::H(const Rational& c) {
    OreElem m(c);
    m.add_term(0, Poly::monomial(1));
    return m;
}

OreElem OreElem::monomial(const Rational& c, int e, Poly q_of_H) {
    OreElem m(c);
    m.add_term(e, q_of_H);
    return m;
}

OreElem OreElem::operator-() const {
    OreElem r(c_);
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, -q);
    return r;
}

OreElem operator+(const OreElem& a, const OreElem& b) {
    // zero belongs to every algebra
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    check_compatible(a, b);
    OreElem r = a;
    for (const auto& [e, q] : b.terms_) r.add_term(e, q);
    return r;
}

OreElem operator-(const OreElem& a, const OreElem& b) { return a + (-b); }

OreElem operator*(const OreElem& a, const OreElem& b) {
    if (a.is_zero() || b.is_zero()) return OreElem(a.is_zero() ? b.c_ : a.c_);
    check_compatible(a, b);
    OreElem r(a.c_);
    for (const auto& [ea, qa] : a.terms_)
        for (const auto& [eb, qb] : b.terms_) {
            // q(H) E^b = E^b q(H + b c)
            r.add_term(ea + eb, qa.shifted(Rational(eb) * a.c_) * qb);
        }
    return r;
}

OreElem operator*(const OreElem& a, const Rational& s) {
    OreElem r(a.c_);
    if (s == 0) return r;
    for (const auto& [e, q] : a.terms_) r.terms_.emplace(e, q * s);
    return r;
}

bool operator<(const OreElem& a, const OreElem& b) {
    if (a.terms_.empty() && b.terms_.empty()) return false;
    if (a.c_ != b.c_) return a.c_ < b.c_;
    return a.terms_ < b.terms_;
}

std::string OreElem::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, q] : terms_) {
        for (int b = q.degree(); b >= 0; --b) {
            Rational coef = q.coeff(b);
            if (coef == 0) continue;
            bool neg = coef < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = neg ? Rational(-coef) : coef;
            std::string part;
            if (e > 0) {
                part += "E";
                if (e != 1) part += "^" + std::to_string(e);
            }
            if (b > 0) {
                if (!part.empty()) part += " ";
                part += "H";
                if (b != 1) part += "^" + std::to_string(b);
            }
            if (part.empty()) {
                out += to_string(mag);
            } else {
                if (mag != 1) out += to_string(mag) + " ";
                out += part;
            }
        }
    }
    return out;
}

OreElem ore_mul(const OreElem& a, const OreElem& b) { return a * b; }

OreElem ad_E(const OreElem& m) {
    OreElem e = OreElem::E(m.structure_constant());
    return e * m - m * e;
}

// ---------------------------------------------------------------- OrePoly

OrePoly::OrePoly(const Rational& c, std::vector<OreElem> coeffs)
    : c_(c), coeffs_(std::move(coeffs)) {
    for (auto& m : coeffs_) {
        if (m.is_zero())
            m = OreElem(c_);  // canonicalize zeros into this algebra
        else if (m.structure_constant() != c_)
            throw AlgebraMismatchError("coefficient from a different Ore algebra");
    }
    trim();
}

OrePoly OrePoly::from_scalar_poly(const Rational& c, const Poly& p) {
    std::vector<OreElem> coeffs;
    for (int j = 0; j <= p.degree(); ++j)
        coeffs.push_back(OreElem::scalar(c, p.coeff(j)));
    return OrePoly(c, std::move(coeffs));
}

void OrePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OreElem OrePoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return OreElem(c_);
    return coeffs_[j];
}

OrePoly OrePoly::operator-() const {
    OrePoly r(c_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& m : coeffs_) r.coeffs_.push_back(-m);
    return r;
}

OrePoly operator+(const OrePoly& a, const OrePoly& b) {
    if (a.c_ != b.c_) throw AlgebraMismatchError("OrePoly c mismatch");
    OrePoly r(a.c_);
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t j = 0; j < n; ++j)
        r.coeffs_.push_back(a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j)));
    r.trim();
    return r;
}

OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

OrePoly operator*(const OrePoly& a, const Rational& s) {
    OrePoly r(a.c_);
    for (const auto& m : a.coeffs_) r.coeffs_.push_back(m * s);
    r.trim();
    return r;
}

OrePoly OrePoly::left_mul(const OreElem& m) const {
    OrePoly r(c_);
    for (const auto& cj : coeffs_) r.coeffs_.push_back(m * cj);
    r.trim();
    return r;
}

OrePoly OrePoly::right_mul(const OreElem& m) const {
    OrePoly r(c_);
    for (const auto& cj : coeffs_) r.coeffs_.push_back(cj * m);
    r.trim();
    return r;
}

std::string OrePoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (!out.empty()) out += "; ";
        out += coeffs_[j].str();
    }
    return out;
}

OrePoly ad_E(const OrePoly& p) {
    OrePoly r(p.structure_constant());
    std::vector<OreElem> coeffs;
    for (const auto& m : p.coeffs()) coeffs.push_back(ad_E(m));
    return OrePoly(p.structure_constant(), std::move(coeffs));
}

OrePoly ad_E_pow(const OrePoly& p, int r) {
    OrePoly q = p;
    for (int i = 0; i < r; ++i) q = ad_E(q);
    return q;
}

OrePoly ore_poly_shift(const OrePoly& p, const Rational& delta) {
    if (delta == 0 || p.is_zero()) return p;
    int d = p.degree();
    std::vector<OreElem> out(static_cast<std::size_t>(d) + 1,
                             OreElem(p.structure_constant()));
    for (int k = 0; k <= d; ++k) {
        OreElem pk = p.coeff(k);
        if (pk.is_zero()) continue;
        Rational dp(1);
        for (int i = k; i >= 0; --i) {
            out[i] += pk * (Rational(binomial(k, i)) * dp);
            dp *= delta;
        }
    }
    return OrePoly(p.structure_constant(), std::move(out));
}

OrePoly ore_dderiv(const OrePoly& p, const Rational& h, int r) {
    if (h == 0) throw InvalidStepError();
    OrePoly q = p;
    Rational hinv = 1 / h;
    for (int step = 0; step < r; ++step) q = (q - ore_poly_shift(q, -h)) * hinv;
    return q;
}

OreElem ore_eval(const OrePoly& p, const Rational& delta) {
    const Rational& c = p.structure_constant();
    OreElem acc(c);
    for (int j = 0; j <= p.degree(); ++j) {
        OreElem pj = p.coeff(j);
        if (pj.is_zero()) continue;
        acc += pj * OreElem::monomial(c, 0, h_plus(delta, j));
    }
    return acc;
}

OrePoly subst_t_plus_H(const OrePoly& p, const Rational& delta) {
    const Rational& c = p.structure_constant();
    if (p.is_zero()) return p;
    int d = p.degree();
    std::vector<OreElem> out(static_cast<std::size_t>(d) + 1, OreElem(c));
    for (int k = 0; k <= d; ++k) {
        OreElem pk = p.coeff(k);
        if (pk.is_zero()) continue;
        for (int i = 0; i <= k; ++i) {
            // (t + H + delta)^k = sum_i C(k,i) t^i (H+delta)^{k-i}
            out[i] += pk * OreElem::monomial(c, 0, h_plus(delta, k - i) *
                                                       Rational(binomial(k, i)));
        }
    }
    return OrePoly(c, std::move(out));
}

std::vector<OreElem> ore_to_pochhammer(const OrePoly& p) {
    std::vector<OreElem> coeffs;
    for (int j = 0; j <= p.degree(); ++j) coeffs.push_back(p.coeff(j));
    return monomial_to_pochhammer_coeffs(coeffs);
}

OrePoly ore_from_pochhammer(const Rational& c, const std::vector<OreElem>& a) {
    return OrePoly(c, pochhammer_to_monomial_coeffs(a));
}

// ---------------------------------------------------------------- equations

OreElem system_residual(const OrePoly& p, int n) {
    if (n < 1) throw IndexError("system equation index must be >= 1");
    const Rational& c = p.structure_constant();
    OreElem en = OreElem::E(c, n);
    return en * ore_eval(p, Rational(n)) - ore_eval(p, Rational(-n)) * en;
}

// The (c-1)-difference inside the elimination equations is the undivided
// one, q(t) - q(t-(c-1)): the recursion formula, the c = 0 display and the
// last-two-equations display all require it, and at c = 1 it vanishes
// identically, which is the del_0 = 0 convention.
static OrePoly undivided_diff(const OrePoly& p, const Rational& h, int r) {
    OrePoly q = p;
    for (int step = 0; step < r; ++step) q = q - ore_poly_shift(q, -h);
    return q;
}

OreElem eq_residual(const OrePoly& p, int n, int k) {
    if (k < 0 || k > n) throw IndexError("eq_n^k requires 0 <= k <= n");
    const Rational& c = p.structure_constant();
    const bool c_is_one = (c == 1);

    OreElem lhs(c), rhs(c);
    for (int i = 0; i <= k; ++i) {
        if (i > 0 && c_is_one) break;
        OrePoly q = p;
        if (i > 0) q = undivided_diff(q, c - 1, i);
        q = ore_dderiv(q, Rational(1), k);
        if (q.is_zero()) continue;
        Rational base = Rational(binomial(k, i));
        if (i % 2) base = -base;

        // ad_E powers of q up to the largest needed exponent
        std::vector<OrePoly> ad{q};
        for (int m = 1; m <= n; ++m) ad.push_back(ad_E(ad.back()));

        for (int j = 0; j <= n - k; ++j) {
            Rational coef = base * Rational(binomial(n - k, j));
            if (coef == 0) continue;
            OreElem val = ore_eval(ad[n - (j + i)], Rational(n) - c * j - i);
            lhs += val * OreElem::E(c, j + i) * coef;
        }
        OreElem val = ore_eval(ad[k - i], Rational(-n + 2 * k - i));
        rhs += val * OreElem::E(c, n - (k - i)) * base;
    }
    return lhs - rhs;
}

OreElem eq_infty_residual(const OrePoly& p, int n) {
    if (n < 0) throw IndexError("eq_infty index must be >= 0");
    const Rational& c = p.structure_constant();
    const bool c_is_one = (c == 1);
    OreElem acc(c);
    for (int i = 0; i <= n; ++i) {
        if (i > 0 && c_is_one) break;
        OrePoly q = p;
        if (i > 0) q = undivided_diff(q, c - 1, i);
        q = ore_dderiv(q, Rational(1), n);
        if (q.is_zero()) continue;
        Rational coef = Rational(binomial(n, i));
        if (i % 2) coef = -coef;
        std::vector<OrePoly> ad{q};
        for (int m = 1; m <= n + 1; ++m) ad.push_back(ad_E(ad.back()));
        acc += ore_eval(ad[n + 1 - i], Rational(n + 1 - i)) * OreElem::E(c, i) * coef;
        acc += ore_eval(ad[n - i], Rational(n + 1 - i) - c) * OreElem::E(c, i + 1) * coef;
        acc -= ore_eval(ad[n - i], Rational(n - 1 - i)) * OreElem::E(c, i + 1) * coef;
    }
    return acc;
}

OreElem eq_infty_c0_residual(const OrePoly& p, int n) {
    if (p.structure_constant() != 0)
        throw DomainError("the c = 0 display requires ad_H(E) = 0");
    const Rational c(0);
    OreElem acc(c);
    for (int i = 0; i <= n; ++i) {
        OrePoly q = ore_dderiv(p, Rational(1), n + i);
        if (q.is_zero()) continue;
        Rational coef = Rational(binomial(n, i));
        std::vector<OrePoly> ad{q};
        for (int m = 1; m <= n + 1; ++m) ad.push_back(ad_E(ad.back()));
        acc += ore_eval(ad[n + 1 - i], Rational(n + 1)) * OreElem::E(c, i) * coef;
        acc += ore_eval(ad[n - i], Rational(n + 1)) * OreElem::E(c, i + 1) * coef;
        acc -= ore_eval(ad[n - i], Rational(n - 1)) * OreElem::E(c, i + 1) * coef;
    }
    return acc;
}

OreElem eq_infty_c1_residual(const OrePoly& p, int n) {
    if (p.structure_constant() != 1)
        throw DomainError("the c = 1 display requires ad_H(E) = E");
    const Rational c(1);
    OreElem a = ore_eval(ad_E_pow(ore_dderiv(p, Rational(1), n), n + 1), Rational(n + 1));
    OreElem b = ore_eval(ad_E_pow(ore_dderiv(p, Rational(1), n + 1), n), Rational(n));
    return a + b * OreElem::E(c, 1);
}

OreElem recursion_residual(const OrePoly& p, int n, int k) {
    if (!(n > k && k > 0)) throw IndexError("recursion formula requires n > k > 0");
    const Rational& c = p.structure_constant();
    OreElem e = OreElem::E(c);
    OreElem target = eq_residual(p, n, k);
    OreElem r_n = eq_residual(p, n, k - 1);
    OreElem r_n1 = eq_residual(p, n - 1, k - 1);
    OreElem r_n2 = eq_residual(p, n - 2, k - 1);
    OreElem combo = r_n - (r_n1 * e) * Rational(2) + r_n2 * e * e - ad_E(r_n1) +
                    ad_E(r_n2) * e;
    return target - combo;
}

OreElem degree_one_combination(const OrePoly& p) {
    if (p.degree() > 1) throw DomainError("degree_one_combination requires deg p <= 1");
    const Rational& c = p.structure_constant();
    OreElem e = OreElem::E(c);
    OreElem r1 = system_residual(p, 1);
    OreElem r2 = system_residual(p, 2);
    OreElem r3 = system_residual(p, 3);
    return r3 + e * e * r1 + e * r1 * e * Rational(3) + r1 * e * e -
           e * r2 * Rational(2) - r2 * e * Rational(2);
}

CheckReport first_N_implies_all(const OrePoly& p, int extra) {
    return timed_check(
        "first_N_implies_all",
        {{"deg", std::to_string(p.degree())},
         {"extra", std::to_string(extra)},
         {"c", to_string(p.structure_constant())}},
        [&](CheckReport& r) {
            int hyp = std::max(1, p.degree());
            for (int n = 1; n <= hyp; ++n) {
                OreElem res = system_residual(p, n);
                if (!res.is_zero()) {
                    r.status = CheckStatus::hypothesis_not_met;
                    r.witness = Witness{n, 0, "0", res.str()};
                    return;
                }
            }
            for (int n = hyp + 1; n <= hyp + extra; ++n) {
                OreElem res = system_residual(p, n);
                if (!res.is_zero()) {
                    r.status = CheckStatus::fail;
                    r.witness = Witness{n, 0, "0", res.str()};
                    return;
                }
            }
        });
}

// ---------------------------------------------------------------- identities

OrePoly id1_residual(const OrePoly& p) {
    const Rational& c = p.structure_constant();
    OrePoly lhs = ad_E(subst_t_plus_H(p));
    OrePoly rhs = subst_t_plus_H(ad_E(p));
    if (c != 0) {
        OrePoly corr = subst_t_plus_H(ore_dderiv(p, c, 1)).right_mul(OreElem::E(c)) * c;
        rhs -= corr;
    }
    return lhs - rhs;
}

OrePoly id2_residual(const OrePoly& p, int n) {
    const Rational& c = p.structure_constant();
    OrePoly lhs = subst_t_plus_H(p).left_mul(OreElem::E(c, n));
    OrePoly rhs(c);
    std::vector<OrePoly> ad{p};
    for (int m = 1; m <= n; ++m) ad.push_back(ad_E(ad.back()));
    for (int j = 0; j <= n; ++j) {
        OrePoly term = subst_t_plus_H(ad[n - j], -c * j).right_mul(OreElem::E(c, j)) *
                       Rational(binomial(n, j));
        rhs += term;
    }
    return lhs - rhs;
}

OreElem id3_residual(const Rational& c, int n, int m) {
    OreElem lhs = OreElem::E(c, n) * OreElem::monomial(c, 0, Poly::monomial(m));
    OreElem rhs = OreElem::monomial(c, 0, h_plus(-Rational(n) * c, m)) * OreElem::E(c, n);
    return lhs - rhs;
}

// ---------------------------------------------------------------- EndOp

void EndOp::add_pair(const OreElem& l, const OreElem& r, const Rational& coeff) {
    if (coeff == 0 || l.is_zero() || r.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = pairs_.find(key);
    if (it == pairs_.end()) {
        pairs_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) pairs_.erase(it);
    }
}

EndOp EndOp::left_mult(const OreElem& a) {
    EndOp op(a.structure_constant());
    op.add_pair(a, OreElem::one(a.structure_constant()), 1);
    return op;
}

EndOp EndOp::right_mult(const OreElem& a) {
    EndOp op(a.structure_constant());
    op.add_pair(OreElem::one(a.structure_constant()), a, 1);
    return op;
}

EndOp EndOp::scalar(const Rational& c, const Rational& v) {
    EndOp op(c);
    op.add_pair(OreElem::one(c), OreElem::one(c), v);
    return op;
}

OreElem EndOp::apply(const OreElem& m) const {
    OreElem acc(c_);
    for (const auto& [lr, coeff] : pairs_) acc += lr.first * m * lr.second * coeff;
    return acc;
}

EndOp EndOp::operator-() const {
    EndOp r(c_);
    for (const auto& [lr, coeff] : pairs_) r.pairs_.emplace(lr, -coeff);
    return r;
}

EndOp operator+(const EndOp& a, const EndOp& b) {
    EndOp r = a;
    for (const auto& [lr, coeff] : b.pairs_) r.add_pair(lr.first, lr.second, coeff);
    return r;
}

EndOp operator-(const EndOp& a, const EndOp& b) { return a + (-b); }

EndOp operator*(const EndOp& a, const EndOp& b) {
    // (a*b)(m) = a(b(m)): left parts compose forward, right parts backward.
    EndOp r(a.c_);
    for (const auto& [lra, ca] : a.pairs_)
        for (const auto& [lrb, cb] : b.pairs_)
            r.add_pair(lra.first * lrb.first, lrb.second * lra.second, ca * cb);
    return r;
}

EndOp operator*(const EndOp& a, const Rational& s) {
    EndOp r(a.c_);
    if (s == 0) return r;
    for (const auto& [lr, coeff] : a.pairs_) r.pairs_.emplace(lr, coeff * s);
    return r;
}

// ---------------------------------------------------------------- rep rows

EndOp rep_entry_direct(const Rational& c, int row, int col, CoeffBasis basis) {
    // Row n, column j: L_{E^n} R_{(H+n)^{j-1}} - R_{(H-n)^{j-1} E^n}
    // (monomial basis), with Pochhammer powers in the other basis.
    int n = row, j = col;
    Poly up, down;
    if (basis == CoeffBasis::monomial) {
        up = h_plus(Rational(n), j - 1);
        down = h_plus(Rational(-n), j - 1);
    } else {
        up = pochhammer_poly(j - 1).shifted(Rational(n));
        down = pochhammer_poly(j - 1).shifted(Rational(-n));
    }
    EndOp op(c);
    op += EndOp::left_mult(OreElem::E(c, n)) * EndOp::right_mult(OreElem::monomial(c, 0, up));
    op -= EndOp::right_mult(OreElem::monomial(c, 0, down) * OreElem::E(c, n));
    return op;
}

namespace {

EndOp m0_entry(const Rational& c, int n, int k) {
    // n^{k-1} L_E^n - (-n)^{k-1} R_E^n
    EndOp op = EndOp::left_mult(OreElem::E(c, n)) * rat_pow(Rational(n), k - 1);
    op -= EndOp::right_mult(OreElem::E(c, n)) * rat_pow(Rational(-n), k - 1);
    return op;
}

EndOp mprime_chain_entry(const Rational& c, int n, int j) {
    // ((M1' - M2') F P'^t_{R_H})_{nj}
    EndOp acc(c);
    for (int k = 1; k <= j; ++k) {
        EndOp head = EndOp::left_mult(OreElem::E(c, n)) * Rational(binomial(n + k - 2, k - 1));
        Rational sign = (k - 1) % 2 ? Rational(-1) : Rational(1);
        head -= EndOp::right_mult(OreElem::E(c, n)) * (sign * Rational(binomial(n, k - 1)));
        Rational scale = Rational(factorial(k - 1)) * Rational(binomial(j - 1, k - 1));
        EndOp tail = EndOp::right_mult(OreElem::monomial(c, 0, pochhammer_poly(j - k)));
        acc += head * tail * scale;
    }
    return acc;
}

Rational conversion_entry(int k, int j) {
    // (D_{-1} s(S)^t D_{-1})_{kj}; upper triangular with unit diagonal.
    Rational ssT = (k == 1 && j == 1) ? Rational(1) : Rational(stirling2(j - 1, k - 1));
    Rational sk = k % 2 ? Rational(-1) : Rational(1);
    Rational sj = j % 2 ? Rational(-1) : Rational(1);
    return sk * ssT * sj;
}

}  // namespace

EndOp rep_entry_chain(const Rational& c, int row, int col, CoeffBasis basis) {
    int n = row, j = col;
    if (basis == CoeffBasis::monomial) {
        // (M0 P^t_{R_H})_{nj} = sum_k M0_{nk} C(j-1,k-1) R_{H^{j-k}}
        EndOp acc(c);
        for (int k = 1; k <= j; ++k) {
            EndOp tail = EndOp::right_mult(OreElem::monomial(c, 0, Poly::monomial(j - k)));
            acc += m0_entry(c, n, k) * tail * Rational(binomial(j - 1, k - 1));
        }
        return acc;
    }
    return mprime_chain_entry(c, n, j);
}

OreElem rep_row_residual(const OrePoly& p, int n, CoeffBasis basis) {
    const Rational& c = p.structure_constant();
    std::vector<OreElem> coeffs;
    for (int j = 0; j <= p.degree(); ++j) coeffs.push_back(p.coeff(j));
    if (basis == CoeffBasis::pochhammer) coeffs = monomial_to_pochhammer_coeffs(coeffs);
    OreElem acc(c);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        EndOp entry = rep_entry_chain(c, n, static_cast<int>(j) + 1, basis);
        acc += entry.apply(coeffs[j]);
    }
    return acc - system_residual(p, n);
}

CheckReport rep_factorization_check(const Rational& c, int n, int d, CoeffBasis basis) {
    std::string basis_name = basis == CoeffBasis::monomial ? "monomial" : "pochhammer";
    return timed_check(
        "rep_factorization",
        {{"n", std::to_string(n)},
         {"d", std::to_string(d)},
         {"basis", basis_name},
         {"c", to_string(c)}},
        [&](CheckReport& r) {
            for (int row = 1; row <= n; ++row)
                for (int col = 1; col <= n; ++col) {
                    EndOp chain(c);
                    if (basis == CoeffBasis::monomial) {
                        chain = rep_entry_chain(c, row, col, CoeffBasis::monomial);
                    } else {
                        // (M' D_{-1} s(S)^t D_{-1})_{row,col}
                        for (int k = 1; k <= col; ++k) {
                            Rational conv = conversion_entry(k, col);
                            if (conv == 0) continue;
                            chain += mprime_chain_entry(c, row, k) * conv;
                        }
                    }
                    EndOp direct = rep_entry_direct(c, row, col, CoeffBasis::monomial);
                    for (int a = 0; a <= d; ++a)
                        for (int b = 0; b <= d; ++b) {
                            OreElem m = OreElem::monomial(c, a, Poly::monomial(b));
                            OreElem lhs = direct.apply(m);
                            OreElem rhs = chain.apply(m);
                            if (lhs != rhs) {
                                r.status = CheckStatus::fail;
                                r.witness = Witness{row, col, lhs.str(), rhs.str()};
                                r.parameters["monomial"] = m.str();
                                return;
                            }
                        }
                }
        });
}

// ---------------------------------------------------------------- parsing

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at(char ch) const { return i < s.size() && s[i] == ch; }
    bool done() const { return i >= s.size(); }
};

Rational parse_rational_at(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    std::string num;
    bool saw_digit = false;
    if (c.at('+') || c.at('-')) {
        if (c.s[c.i] == '-') num += '-';  // cpp_int rejects a leading '+'
        ++c.i;
    }
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        num += c.s[c.i++];
        saw_digit = true;
    }
    if (!saw_digit) throw ParseError("expected a rational literal", start);
    std::string den;
    if (c.at('/')) {
        ++c.i;
        std::size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
            den += c.s[c.i++];
        if (den.empty()) throw ParseError("expected denominator digits", dstart);
        if (Int(den) == 0) throw ParseError("zero denominator", dstart);
    }
    return Rational(Int(num), den.empty() ? Int(1) : Int(den));
}

int parse_exponent(Cursor& c) {
    if (!c.at('^')) return 1;
    ++c.i;
    c.skip_ws();
    std::size_t start = c.i;
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits += c.s[c.i++];
    if (digits.empty()) throw ParseError("expected exponent digits", start);
    return std::stoi(digits);
}

// One term: [rational] [E[^a]] [H[^b]], at least one factor present.
OreElem parse_term(Cursor& c, const Rational& alg_c) {
    c.skip_ws();
    std::size_t start = c.i;
    bool any = false;
    Rational coef(1);
    if (c.at('+') || c.at('-') || (c.i < c.s.size() &&
        std::isdigit(static_cast<unsigned char>(c.s[c.i])))) {
        coef = parse_rational_at(c);
        any = true;
        c.skip_ws();
        if (c.at('*')) { ++c.i; c.skip_ws(); }
    }
    int e = 0, h = 0;
    if (c.at('E')) {
        ++c.i;
        e = parse_exponent(c);
        any = true;
        c.skip_ws();
        if (c.at('*')) { ++c.i; c.skip_ws(); }
    }
    if (c.at('H')) {
        ++c.i;
        h = parse_exponent(c);
        any = true;
    }
    if (!any) throw ParseError("expected a term", start);
    return OreElem::monomial(alg_c, e, Poly::monomial(h, coef));
}

OreElem parse_coeff(Cursor& c, const Rational& alg_c, std::size_t seg_end) {
    OreElem acc(alg_c);
    c.skip_ws();
    if (c.i >= seg_end) return acc;  // empty coefficient = zero
    bool first = true;
    while (c.i < seg_end) {
        c.skip_ws();
        if (c.i >= seg_end) break;
        if (!first && !c.at('+') && !c.at('-'))
            throw ParseError("expected '+' or '-' between terms", c.i);
        // a term-level sign covers bare "-E" / "-H"; a further signed
        // rational inside the term ("+ -1/2 H") is handled by parse_term
        Rational sign(1);
        if (c.at('+') || c.at('-')) {
            if (c.s[c.i] == '-') sign = -1;
            ++c.i;
            c.skip_ws();
        }
        first = false;
        acc += parse_term(c, alg_c) * sign;
        c.skip_ws();
    }
    return acc;
}

}  // namespace

OrePoly parse_ore_poly(std::string_view text, const Rational& c) {
    Cursor cur{text, 0};
    std::vector<OreElem> coeffs;
    std::size_t seg_start = 0;
    while (true) {
        std::size_t semi = text.find(';', seg_start);
        std::size_t seg_end = semi == std::string_view::npos ? text.size() : semi;
        cur.i = seg_start;
        coeffs.push_back(parse_coeff(cur, c, seg_end));
        cur.skip_ws();
        if (cur.i < seg_end) throw ParseError("unexpected characters in coefficient", cur.i);
        if (semi == std::string_view::npos) break;
        seg_start = semi + 1;
    }
    return OrePoly(c, std::move(coeffs));
}

// ---------------------------------------------------------------- suite

namespace {

using MonomialFn = std::function<void(const OrePoly&, const Rational&, int, int, int)>;

// Visits p = E^a H^b t^d for all exponents <= cfg.max_exp, all c values.
void for_each_monomial(const OreSweepConfig& cfg, const MonomialFn& fn) {
    for (const Rational& c : cfg.c_values)
        for (int a = 0; a <= cfg.max_exp; ++a)
            for (int b = 0; b <= cfg.max_exp; ++b)
                for (int d = 0; d <= cfg.max_exp; ++d) {
                    std::vector<OreElem> coeffs(static_cast<std::size_t>(d) + 1,
                                                OreElem(c));
                    coeffs[d] = OreElem::monomial(c, a, Poly::monomial(b));
                    fn(OrePoly(c, std::move(coeffs)), c, a, b, d);
                }
}

void fail_with(CheckReport& r, int i, int j, const std::string& expected,
               const OreElem& actual, const OrePoly& p) {
    r.status = CheckStatus::fail;
    r.witness = Witness{i, j, expected, actual.str()};
    r.parameters["p"] = p.str();
    r.parameters["c"] = to_string(p.structure_constant());
}

std::string c_list(const OreSweepConfig& cfg) {
    std::string out;
    for (const auto& c : cfg.c_values) {
        if (!out.empty()) out += ",";
        out += to_string(c);
    }
    return out;
}

}  // namespace

std::vector<CheckReport> run_ore_suite(const OreSweepConfig& cfg) {
    std::vector<CheckReport> out;
    std::map<std::string, std::string> base_params = {
        {"c", c_list(cfg)},
        {"max_exp", std::to_string(cfg.max_exp)},
        {"max_n", std::to_string(cfg.max_n)}};

    out.push_back(timed_check("ore_associativity", base_params, [&](CheckReport& r) {
        std::mt19937 rng(20240915);
        std::uniform_int_distribution<int> expo(0, 4), coef(-3, 3);
        for (int trial = 0; trial < 200 && !r.failed(); ++trial) {
            const Rational& c = cfg.c_values[trial % cfg.c_values.size()];
            auto rand_elem = [&] {
                OreElem m(c);
                for (int t = 0; t < 2; ++t)
                    m += OreElem::monomial(c, expo(rng),
                                           Poly::monomial(expo(rng), Rational(coef(rng))));
                return m;
            };
            OreElem a = rand_elem(), b = rand_elem(), d = rand_elem();
            OreElem lhs = (a * b) * d, rhs = a * (b * d);
            if (lhs != rhs) {
                r.status = CheckStatus::fail;
                r.witness = Witness{trial, 0, lhs.str(), rhs.str()};
            }
        }
    }));

    out.push_back(timed_check("eq0_is_system", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational&, int, int, int) {
            if (r.failed()) return;
            for (int n = 1; n <= cfg.max_n; ++n) {
                OreElem lhs = eq_residual(p, n, 0);
                OreElem rhs = system_residual(p, n);
                if (lhs != rhs) fail_with(r, n, 0, rhs.str(), lhs, p);
            }
        });
    }));

    out.push_back(timed_check("eqnn_trivial", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational&, int, int, int) {
            if (r.failed()) return;
            for (int n = 0; n <= cfg.max_n; ++n) {
                OreElem res = eq_residual(p, n, n);
                if (!res.is_zero()) fail_with(r, n, n, "0", res, p);
            }
        });
    }));

    out.push_back(timed_check("recursion_formula", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational&, int, int, int) {
            if (r.failed()) return;
            for (int n = 2; n <= cfg.max_n; ++n)
                for (int k = 1; k < n; ++k) {
                    OreElem res = recursion_residual(p, n, k);
                    if (!res.is_zero()) fail_with(r, n, k, "0", res, p);
                }
        });
    }));

    out.push_back(timed_check("eq_infty_consistency", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational& c, int, int, int) {
            if (r.failed()) return;
            for (int n = 0; n <= cfg.max_n; ++n) {
                OreElem disp = eq_infty_residual(p, n);
                OreElem gen = eq_residual(p, n + 1, n);
                if (disp != gen) {
                    fail_with(r, n + 1, n, gen.str(), disp, p);
                    return;
                }
                if (c == 0 && disp != eq_infty_c0_residual(p, n)) {
                    fail_with(r, n + 1, n, disp.str(), eq_infty_c0_residual(p, n), p);
                    return;
                }
                if (c == 1 && disp != eq_infty_c1_residual(p, n)) {
                    fail_with(r, n + 1, n, disp.str(), eq_infty_c1_residual(p, n), p);
                    return;
                }
            }
        });
    }));

    out.push_back(timed_check("triangularity", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational& c, int, int, int) {
            if (r.failed()) return;
            for (int n = 1; n <= cfg.max_n; ++n) {
                OreElem base = eq_infty_residual(p, n);
                for (int j = 0; j < n && j <= cfg.max_exp; ++j) {
                    // bump p_j by E^2 H + 3
                    std::vector<OreElem> coeffs;
                    for (int t = 0; t <= std::max(p.degree(), j); ++t)
                        coeffs.push_back(p.coeff(t));
                    coeffs[j] += OreElem::monomial(c, 2, Poly::monomial(1)) +
                                 OreElem::scalar(c, 3);
                    OreElem bumped = eq_infty_residual(OrePoly(c, coeffs), n);
                    if (bumped != base) {
                        fail_with(r, n, j, base.str(), bumped, p);
                        return;
                    }
                }
            }
        });
    }));

    out.push_back(timed_check("remark_degree", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational& c, int, int, int) {
            if (r.failed() || p.is_zero()) return;
            int N = p.degree();
            // Beyond the degree every equation of the triangular system vanishes.
            for (int n = N + 1; n <= N + 2; ++n) {
                OreElem res = eq_infty_residual(p, n);
                if (!res.is_zero()) {
                    fail_with(r, n, 0, "0", res, p);
                    return;
                }
            }
            // eq_{N+1}^N reduces to N! ad_E^{N+1}(p_N).
            OrePoly top(c, {p.coeff(N)});
            OreElem expect = ad_E_pow(top, N + 1).coeff(0) * Rational(factorial(N));
            OreElem got = eq_infty_residual(p, N);
            if (got != expect) {
                fail_with(r, N, 0, expect.str(), got, p);
                return;
            }
            if (N >= 1) {
                // eq_N^{N-1} = (N-1)! [ ad^N(p_{N-1})
                //   + N ad^N(p_N)(H + (N+1)/2) + N(N+1-Nc) ad^{N-1}(p_N) E ]
                Rational coef = Rational(N) * (Rational(N + 1) - Rational(N) * c);
                OrePoly pn(c, {p.coeff(N)});
                OrePoly pn1(c, {p.coeff(N - 1)});
                OreElem mid = ad_E_pow(pn, N).coeff(0) *
                              OreElem::monomial(c, 0,
                                                h_plus(Rational(N + 1) / 2, 1)) *
                              Rational(N);
                OreElem expect2 = (ad_E_pow(pn1, N).coeff(0) + mid +
                                   ad_E_pow(pn, N - 1).coeff(0) * OreElem::E(c) * coef) *
                                  Rational(factorial(N - 1));
                OreElem got2 = eq_infty_residual(p, N - 1);
                if (got2 != expect2) {
                    fail_with(r, N - 1, 0, expect2.str(), got2, p);
                    return;
                }
            }
        });
    }));

    out.push_back(timed_check("first_N_c2_family", base_params, [&](CheckReport& r) {
        const Rational c(2);
        std::vector<Poly> fs;
        for (int e = 0; e <= 4; ++e) fs.push_back(Poly::monomial(e));
        fs.push_back(Poly::monomial(3) - Poly::monomial(1));                 // t^3 - t
        fs.push_back(Poly::monomial(4) + Poly::monomial(2) - Poly(5));      // t^4 + t^2 - 5
        for (int m = 0; m <= 3 && !r.failed(); ++m)
            for (const Poly& f : fs) {
                OrePoly p = OrePoly::from_scalar_poly(c, f).left_mul(OreElem::E(c, m));
                CheckReport sub = first_N_implies_all(p, 4);
                if (sub.status != CheckStatus::pass) {
                    r.status = CheckStatus::fail;
                    r.witness = sub.witness;
                    r.parameters["p"] = p.str();
                    break;
                }
            }
    }));

    out.push_back(timed_check("first_N_kernel", base_params, [&](CheckReport& r) {
        for (const Rational& c : cfg.c_values)
            for (int a = 0; a <= 3 && !r.failed(); ++a) {
                OrePoly p(c, {OreElem::E(c, a)});
                CheckReport sub = first_N_implies_all(p, 6);
                if (sub.status != CheckStatus::pass) {
                    r.status = CheckStatus::fail;
                    r.witness = sub.witness;
                    r.parameters["p"] = p.str();
                }
            }
    }));

    out.push_back(timed_check("first_N_hypothesis_gate", base_params,
                              [&](CheckReport& r) {
        // c = 0, p = E t violates the very first equation; the report must
        // say hypothesis-not-met, not fail.
        const Rational c(0);
        OrePoly p(c, {OreElem(c), OreElem::E(c)});
        CheckReport sub = first_N_implies_all(p, 2);
        if (sub.status != CheckStatus::hypothesis_not_met) {
            r.status = CheckStatus::fail;
            r.parameters["got_status"] = status_name(sub.status);
        }
    }));

    out.push_back(timed_check("degree_one_dependency", base_params, [&](CheckReport& r) {
        for (const Rational& c : cfg.c_values)
            for (int a = 0; a <= 2 && !r.failed(); ++a)
                for (int b = 0; b <= 2; ++b)
                    for (int d = 0; d <= 1; ++d) {
                        std::vector<OreElem> coeffs(static_cast<std::size_t>(d) + 1,
                                                    OreElem(c));
                        coeffs[d] = OreElem::monomial(c, a, Poly::monomial(b));
                        OrePoly p(c, coeffs);
                        OreElem res = degree_one_combination(p);
                        if (!res.is_zero()) {
                            fail_with(r, d, 0, "0", res, p);
                            return;
                        }
                        // mixed two-term polynomial E t + H^b
                        OrePoly q(c, {OreElem::monomial(c, 0, Poly::monomial(b)),
                                      OreElem::E(c, std::max(a, 1))});
                        OreElem res2 = degree_one_combination(q);
                        if (!res2.is_zero()) {
                            fail_with(r, d, 1, "0", res2, q);
                            return;
                        }
                    }
    }));

    out.push_back(timed_check("intro_constant_solvability", base_params,
                              [&](CheckReport& r) {
        for (const Rational& c : cfg.c_values)
            for (int a = 0; a <= cfg.max_exp && !r.failed(); ++a)
                for (int b = 0; b <= cfg.max_exp; ++b) {
                    OreElem p0 = OreElem::monomial(c, a, Poly::monomial(b));
                    OrePoly p(c, {p0});
                    bool solvable = true;
                    for (int n = 1; n <= 4; ++n)
                        if (!system_residual(p, n).is_zero()) {
                            solvable = false;
                            break;
                        }
                    bool kernel = ad_E(p0).is_zero();
                    if (solvable != kernel) {
                        fail_with(r, a, b, kernel ? "solvable" : "not solvable",
                                  p0, p);
                        return;
                    }
                }
    }));

    out.push_back(timed_check("id1", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational&, int, int, int) {
            if (r.failed()) return;
            OrePoly res = id1_residual(p);
            if (!res.is_zero()) {
                r.status = CheckStatus::fail;
                r.witness = Witness{0, 0, "0", res.str()};
                r.parameters["p"] = p.str();
            }
        });
    }));

    out.push_back(timed_check("id2", base_params, [&](CheckReport& r) {
        for_each_monomial(cfg, [&](const OrePoly& p, const Rational&, int, int, int) {
            if (r.failed()) return;
            for (int n = 0; n <= 3; ++n) {
                OrePoly res = id2_residual(p, n);
                if (!res.is_zero()) {
                    r.status = CheckStatus::fail;
                    r.witness = Witness{n, 0, "0", res.str()};
                    r.parameters["p"] = p.str();
                    return;
                }
            }
        });
    }));

    out.push_back(timed_check("id3", base_params, [&](CheckReport& r) {
        for (const Rational& c : cfg.c_values)
            for (int n = 0; n <= cfg.max_n && !r.failed(); ++n)
                for (int m = 0; m <= cfg.max_n; ++m) {
                    OreElem res = id3_residual(c, n, m);
                    if (!res.is_zero()) {
                        r.status = CheckStatus::fail;
                        r.witness = Witness{n, m, "0", res.str()};
                        r.parameters["c"] = to_string(c);
                        return;
                    }
                }
    }));

    for (CoeffBasis basis : {CoeffBasis::monomial, CoeffBasis::pochhammer}) {
        std::string name = basis == CoeffBasis::monomial ? "rep_row_monomial"
                                                         : "rep_row_pochhammer";
        out.push_back(timed_check(name, base_params, [&](CheckReport& r) {
            OreSweepConfig small = cfg;
            small.max_exp = std::min(cfg.max_exp, 2);
            small.c_values = {Rational(0), Rational(1), Rational(2)};
            for_each_monomial(small, [&](const OrePoly& p, const Rational&, int, int, int) {
                if (r.failed()) return;
                for (int n = 1; n <= 3; ++n) {
                    OreElem res = rep_row_residual(p, n, basis);
                    if (!res.is_zero()) {
                        fail_with(r, n, 0, "0", res, p);
                        return;
                    }
                }
            });
        }));
    }

    for (CoeffBasis basis : {CoeffBasis::monomial, CoeffBasis::pochhammer}) {
        for (const Rational& c : {Rational(0), Rational(1), Rational(2)}) {
            CheckReport sub = rep_factorization_check(c, 3, 2, basis);
            out.push_back(sub);
        }
    }

    return out;
}

}  // namespace orelim
