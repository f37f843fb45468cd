#include "orelim/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace orelim {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational parse_rational(std::string_view s) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> Rational { throw ParseError(msg, i); };
    auto scan_int = [&]() -> std::string {
        std::string out;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') out += '-';  // cpp_int rejects a leading '+'
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
        if (i == start) fail("expected digits");
        return out;
    };
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::string num = scan_int();
    std::string den = "1";
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = scan_int();
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) fail("trailing characters in rational");
    Int d(den);
    if (d == 0) fail("zero denominator");
    return Rational(Int(num), d);
}

Rational rat_pow(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw DomainError("0 has no negative power");
        return 1 / rat_pow(base, -exp);
    }
    Rational acc(1), b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    thread_local static std::map<std::pair<long, long>, Int> memo;
    if (k == 0 || k == n) return 1;
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int v = binomial(n - 1, k - 1) + binomial(n - 1, k);  // Pascal rule
    memo.emplace(key, v);
    return v;
}

Int stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    thread_local static std::map<std::pair<long, long>, Int> memo;
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int v = stirling2(n - 1, k - 1) + k * stirling2(n - 1, k);
    memo.emplace(key, v);
    return v;
}

Int factorial(long n) {
    if (n < 0) return 0;
    Int v = 1;
    for (long i = 2; i <= n; ++i) v *= i;
    return v;
}

Rational rising(const Rational& a, int m) {
    Rational v(1);
    for (int i = 0; i < m; ++i) v *= a + i;
    return v;
}

Rational combinatorial(Combinatorial kind, long i, long j) {
    switch (kind) {
        case Combinatorial::binomial: return Rational(binomial(i, j));
        case Combinatorial::stirling2: return Rational(stirling2(i, j));
        case Combinatorial::factorial: return Rational(factorial(i));
    }
    throw DomainError("unknown combinatorial kind");
}

// ---------------------------------------------------------------- Poly

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(int k, const Rational& c) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.coeffs_[k] = c;
    }
    return p;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly acc(1), b = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        if (e > 1) b *= b;
    }
    return acc;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

Poly Poly::shifted(const Rational& delta) const {
    if (delta == 0 || is_zero()) return *this;
    // q_i = sum_{k>=i} C(k,i) p_k delta^{k-i}
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rational dp(1);
        for (std::size_t i = k + 1; i-- > 0;) {
            out[i] += Rational(binomial(static_cast<long>(k), static_cast<long>(i))) *
                      coeffs_[k] * dp;
            dp *= delta;
        }
    }
    return Poly(std::move(out));
}

Poly Poly::scaled_arg(const Rational& s) const {
    std::vector<Rational> out = coeffs_;
    Rational sp(1);
    for (auto& c : out) {
        c *= sp;
        sp *= s;
    }
    return Poly(std::move(out));
}

Poly Poly::negated_arg() const { return scaled_arg(Rational(-1)); }

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? Rational(-c) : c;
        std::string magstr = to_string(mag);
        if (k == 0) {
            out += magstr;
        } else {
            if (mag != 1) {
                out += magstr;
                out += "*";
            }
            out += var;
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

Poly Poly::parse(std::string_view s, std::string_view var) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto scan_uint = [&]() -> std::string {
        std::string out;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
        return out;
    };
    Poly result;
    skip_ws();
    if (i == s.size()) throw ParseError("empty polynomial", i);
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip_ws();
        if (!first) {
            if (s[i] == '+') {
                ++i;
            } else if (s[i] == '-') {
                sign = -1;
                ++i;
            } else {
                throw ParseError("expected '+' or '-' between terms", i);
            }
            skip_ws();
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
            skip_ws();
        } else if (s[i] == '+') {
            ++i;
            skip_ws();
        }
        first = false;

        Rational coeff(1);
        bool saw_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num = scan_uint();
            std::string den = "1";
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = scan_uint();
                if (den.empty()) throw ParseError("expected denominator digits", i);
                if (Int(den) == 0) throw ParseError("zero denominator", i);
            }
            coeff = Rational(Int(num), Int(den));
            saw_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exp = 0;
        if (i + var.size() <= s.size() && s.substr(i, var.size()) == var) {
            i += var.size();
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e = scan_uint();
                if (e.empty()) throw ParseError("expected exponent digits", i);
                exp = std::stoi(e);
            }
        } else if (!saw_coeff) {
            throw ParseError("expected coefficient or variable", i);
        }
        result += Poly::monomial(exp, sign * coeff);
        skip_ws();
    }
    return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly rem = a, quot;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Rational f = rem.leading() / b.leading();
        Poly term = Poly::monomial(d, f);
        quot += term;
        rem -= term * b;
    }
    return {quot, rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Rational inv = 1 / leading();
    r *= inv;
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    // Euclid over Q; each remainder made monic to keep coefficients tame.
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_shift(const Poly& p, const Rational& delta) { return p.shifted(delta); }

Poly discrete_derivative(const Poly& p, const Rational& h, int r) {
    if (h == 0) throw InvalidStepError();
    Poly q = p;
    Rational hinv = 1 / h;
    for (int step = 0; step < r; ++step) {
        q = (q - q.shifted(-h)) * hinv;
    }
    return q;
}

Poly pochhammer_poly(int n) {
    Poly p(1);
    for (int i = 0; i < n; ++i) p *= Poly::monomial(1) + Poly(Rational(i));
    return p;
}

std::vector<Rational> basis_change(const std::vector<Rational>& coeffs, BasisDirection dir) {
    if (dir == BasisDirection::monomial_to_pochhammer)
        return monomial_to_pochhammer_coeffs(coeffs);
    return pochhammer_to_monomial_coeffs(coeffs);
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace orelim
