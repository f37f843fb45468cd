#ifndef ORELIM_EXACTPOLY_HPP
#define ORELIM_EXACTPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orelim/errors.hpp"

namespace orelim {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always reduced, denominator > 0, zero is 0/1;
// cpp_rational maintains those invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);  // "a" or "a/b", optional sign
Rational rat_pow(const Rational& base, int exp);

Int binomial(long n, long k);    // 0 outside 0 <= k <= n
Int stirling2(long n, long k);   // S(n,k), 0 outside range, S(0,0) = 1
Int factorial(long n);

// Rising factorial a(a+1)...(a+m-1); empty product for m = 0.
Rational rising(const Rational& a, int m);

// Dense univariate polynomial over Rational. Coefficients ascending by
// degree, trailing zeros trimmed; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (c != 0) coeffs_.push_back(c); }
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(1); }
    static Poly monomial(int k, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    const Rational& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& s);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Total order (degree, then coefficients); used for normal-form keys.
    friend bool operator<(const Poly& a, const Poly& b);

    // Horner evaluation; T needs T*T, T+T and construction from Rational.
    template <class T>
    T eval(const T& v) const {
        T acc = T(Rational(0));
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * v + T(*it);
        return acc;
    }

    Poly shifted(const Rational& delta) const;   // p(t + delta)
    Poly scaled_arg(const Rational& s) const;    // p(s * t)
    Poly negated_arg() const;                    // p(-t)

    // Canonical form: terms in strictly decreasing degree, "c*x^k" with
    // reduced rational c, coefficient 1 omitted, x^0/x^1 as "" / "x".
    std::string str(std::string_view var = "x") const;
    static Poly parse(std::string_view s, std::string_view var = "x");

    // Exact division; {quotient, remainder} with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    Poly monic() const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0

// p(t + delta); degree preserved.
Poly poly_shift(const Poly& p, const Rational& delta);

// r-fold h-discrete derivative ((p(t) - p(t-h))/h iterated). h = 0 throws.
Poly discrete_derivative(const Poly& p, const Rational& h, int r);

// (t)_n = t(t+1)...(t+n-1).
Poly pochhammer_poly(int n);

enum class Combinatorial { binomial, stirling2, factorial };
Rational combinatorial(Combinatorial kind, long i, long j = 0);

enum class BasisDirection { monomial_to_pochhammer, pochhammer_to_monomial };

// Coefficient-sequence conversion between sum p_j t^j and sum a_j (t)_j.
// Works over any Q-module C with +, -, scalar multiplication and is_zero;
// the two directions are mutually inverse.
template <class C>
std::vector<C> pochhammer_to_monomial_coeffs(const std::vector<C>& a) {
    std::vector<C> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        Poly pj = pochhammer_poly(static_cast<int>(j));
        for (int k = 0; k <= pj.degree(); ++k) {
            Rational c = pj.coeff(k);
            if (c != 0) out[k] = out[k] + a[j] * c;
        }
    }
    return out;
}

template <class C>
std::vector<C> monomial_to_pochhammer_coeffs(const std::vector<C>& p) {
    std::vector<C> rem = p;
    std::vector<C> a(p.size());
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
        a[d] = rem[d];
        Poly pd = pochhammer_poly(d);
        for (int k = 0; k < d; ++k) {  // (t)_d is monic; strip it from rem
            Rational c = pd.coeff(k);
            if (c != 0) rem[k] = rem[k] - a[d] * c;
        }
    }
    return a;
}

std::vector<Rational> basis_change(const std::vector<Rational>& coeffs, BasisDirection dir);

// Quotient of polynomials; denominator monic, gcd(num, den) = 1, so equality
// of normal forms is syntactic.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rational& c) : num_(c) {}
    RatFunc(int c) : num_(Rational(c)) {}
    RatFunc(Poly p) : num_(std::move(p)) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str(std::string_view var = "x") const;

private:
    Poly num_;
    Poly den_ = Poly(1);
    void normalize();
};

}  // namespace orelim

#endif
