#ifndef ORELIM_ORESYSTEM_HPP
#define ORELIM_ORESYSTEM_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orelim/exactpoly.hpp"
#include "orelim/report.hpp"

namespace orelim {

// Element of A = k<E,H : HE = E(H+c)> in normal form sum_a E^a q_a(H).
// Every element carries the structure constant c of its algebra; binary
// operations on mismatched algebras throw AlgebraMismatchError.
class OreElem {
public:
    explicit OreElem(const Rational& c = Rational(0)) : c_(c) {}
    static OreElem scalar(const Rational& c, const Rational& v);
    static OreElem one(const Rational& c) { return scalar(c, 1); }
    static OreElem E(const Rational& c, int power = 1);
    static OreElem H(const Rational& c);
    // E^e * q(H)
    static OreElem monomial(const Rational& c, int e, Poly q_of_H);

    const Rational& structure_constant() const { return c_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Poly>& terms() const { return terms_; }

    OreElem operator-() const;
    friend OreElem operator+(const OreElem& a, const OreElem& b);
    friend OreElem operator-(const OreElem& a, const OreElem& b);
    // Skew product: (E^a q(H))(E^b r(H)) = E^{a+b} q(H + b c) r(H).
    friend OreElem operator*(const OreElem& a, const OreElem& b);
    friend OreElem operator*(const OreElem& a, const Rational& s);
    friend OreElem operator*(const Rational& s, const OreElem& a) { return a * s; }
    OreElem& operator+=(const OreElem& o) { return *this = *this + o; }
    OreElem& operator-=(const OreElem& o) { return *this = *this - o; }
    OreElem& operator*=(const OreElem& o) { return *this = *this * o; }

    friend bool operator==(const OreElem& a, const OreElem& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;  // shared zero
        return a.c_ == b.c_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const OreElem& a, const OreElem& b) { return !(a == b); }
    friend bool operator<(const OreElem& a, const OreElem& b);

    std::string str() const;

private:
    Rational c_;
    std::map<int, Poly> terms_;  // E-exponent -> nonzero Poly in H
    void add_term(int e, const Poly& q);
    friend OreElem check_compatible(const OreElem&, const OreElem&);
};

OreElem ore_mul(const OreElem& a, const OreElem& b);
OreElem ad_E(const OreElem& m);  // Em - mE

// Polynomial in a central variable t with OreElem coefficients.
class OrePoly {
public:
    explicit OrePoly(const Rational& c = Rational(0)) : c_(c) {}
    OrePoly(const Rational& c, std::vector<OreElem> coeffs);
    static OrePoly from_scalar_poly(const Rational& c, const Poly& p);  // k[t] subset

    const Rational& structure_constant() const { return c_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 if zero
    bool is_zero() const { return coeffs_.empty(); }
    OreElem coeff(int j) const;
    const std::vector<OreElem>& coeffs() const { return coeffs_; }

    OrePoly operator-() const;
    friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b);
    friend OrePoly operator*(const OrePoly& a, const Rational& s);
    OrePoly& operator+=(const OrePoly& o) { return *this = *this + o; }
    OrePoly& operator-=(const OrePoly& o) { return *this = *this - o; }
    friend bool operator==(const OrePoly& a, const OrePoly& b) {
        return a.c_ == b.c_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    OrePoly left_mul(const OreElem& m) const;   // coefficientwise m * p_j
    OrePoly right_mul(const OreElem& m) const;  // coefficientwise p_j * m

    std::string str() const;

private:
    Rational c_;
    std::vector<OreElem> coeffs_;
    void trim();
};

// --- operators on M[t] -------------------------------------------------

OrePoly ad_E(const OrePoly& p);
OrePoly ad_E_pow(const OrePoly& p, int r);
// p(t + delta) (t central, delta scalar)
OrePoly ore_poly_shift(const OrePoly& p, const Rational& delta);
// r-fold h-discrete derivative, coefficientwise in t. h = 0 throws.
OrePoly ore_dderiv(const OrePoly& p, const Rational& h, int r);
// Evaluation p(H + delta) = sum_j p_j (H+delta)^j (powers on the right).
OreElem ore_eval(const OrePoly& p, const Rational& delta);
// p(t + H + delta) expanded with t central; H-powers absorbed on the right.
OrePoly subst_t_plus_H(const OrePoly& p, const Rational& delta = Rational(0));

// Pochhammer-basis coefficients of p (and back).
std::vector<OreElem> ore_to_pochhammer(const OrePoly& p);
OrePoly ore_from_pochhammer(const Rational& c, const std::vector<OreElem>& a);

// --- the equations ------------------------------------------------------

// E^n p(H+n) - p(H-n) E^n.
OreElem system_residual(const OrePoly& p, int n);

// LHS - RHS of eq_n^k (k = 0 recovers the original system; k = n is trivial).
// For c = 1 the convention del_{c-1} = del_0 = 0 drops every i >= 1 term.
OreElem eq_residual(const OrePoly& p, int n, int k);

// eq_{n+1}^n computed from its displayed form.
OreElem eq_infty_residual(const OrePoly& p, int n);
// The simplified displays for c = 0 / c = 1 (DomainError on wrong c).
OreElem eq_infty_c0_residual(const OrePoly& p, int n);
OreElem eq_infty_c1_residual(const OrePoly& p, int n);

// eq^k_n minus the recursion-formula combination of level k-1 equations;
// zero certifies the formula. Requires n > k > 0.
OreElem recursion_residual(const OrePoly& p, int n, int k);

// Residual of the equation-3 dependency on equations 1 and 2 for deg <= 1:
// res3 + E^2 res1 + 3 E res1 E + res1 E^2 - 2 E res2 - 2 res2 E.
OreElem degree_one_combination(const OrePoly& p);

// If system_residual(p, n) = 0 for n = 1..max(1, deg p), asserts it for the
// next `extra` indices; hypothesis failures are reported, not failed.
CheckReport first_N_implies_all(const OrePoly& p, int extra);

// --- structural identities ----------------------------------------------

OrePoly id1_residual(const OrePoly& p);
OrePoly id2_residual(const OrePoly& p, int n);
OreElem id3_residual(const Rational& c, int n, int m);

// --- matrix representation (End(M) level) --------------------------------

// Finite sum of maps m -> coeff * left * m * right in normal form.
class EndOp {
public:
    explicit EndOp(const Rational& c = Rational(0)) : c_(c) {}
    static EndOp left_mult(const OreElem& a);
    static EndOp right_mult(const OreElem& a);
    static EndOp scalar(const Rational& c, const Rational& v);

    bool is_zero() const { return pairs_.empty(); }
    OreElem apply(const OreElem& m) const;

    EndOp operator-() const;
    friend EndOp operator+(const EndOp& a, const EndOp& b);
    friend EndOp operator-(const EndOp& a, const EndOp& b);
    friend EndOp operator*(const EndOp& a, const EndOp& b);  // composition
    friend EndOp operator*(const EndOp& a, const Rational& s);
    friend EndOp operator*(const Rational& s, const EndOp& a) { return a * s; }
    EndOp& operator+=(const EndOp& o) { return *this = *this + o; }
    EndOp& operator-=(const EndOp& o) { return *this = *this - o; }

private:
    Rational c_;
    std::map<std::pair<OreElem, OreElem>, Rational> pairs_;
    void add_pair(const OreElem& l, const OreElem& r, const Rational& coeff);
};

enum class CoeffBasis { monomial, pochhammer };

// Row `row`, column `col` of the representation of the system in the given
// basis, straight from its displayed entries.
EndOp rep_entry_direct(const Rational& c, int row, int col, CoeffBasis basis);
// The same entry through the factored chain (M0 P^t or (M1'-M2') F P'^t,
// further composed with the Stirling conversion for the pochhammer route).
EndOp rep_entry_chain(const Rational& c, int row, int col, CoeffBasis basis);

// Row applied to p's coefficient vector in the requested basis, minus
// system_residual(p, n); zero certifies faithfulness of the representation.
OreElem rep_row_residual(const OrePoly& p, int n, CoeffBasis basis);

// Extensional equality (action on E^a H^b, a,b <= d) of the direct and
// factored entries over the n-minor.
CheckReport rep_factorization_check(const Rational& c, int n, int d, CoeffBasis basis);

// --- parsing / printing --------------------------------------------------

// Grammar: semicolon-separated t-coefficients, lowest degree first; each a
// sum of terms `q E^a H^b` (q rational, E/H optional, bare E/H = power 1).
OrePoly parse_ore_poly(std::string_view text, const Rational& c);

// --- sweep suite ----------------------------------------------------------

struct OreSweepConfig {
    std::vector<Rational> c_values = {Rational(0), Rational(1), Rational(2),
                                      Rational(1, 2), Rational(-1)};
    int max_exp = 3;  // E/H exponents and t-degree of swept monomials
    int max_n = 5;
};

std::vector<CheckReport> run_ore_suite(const OreSweepConfig& cfg);

}  // namespace orelim

#endif
