#include "orelim/jacobi.hpp"

namespace orelim {

namespace {

// Shared coefficient of the two expansions:
//   c_k = C(n,k) prod_{m=1..k}(n+a+b+m) prod_{m=k+1..n}(a+m)
// (empty products are 1, which covers the k=0 and k=n edge conventions).
Rational term_coeff(int n, int k, const Rational& a, const Rational& b) {
    Rational c(binomial(n, k));
    for (int m = 1; m <= k; ++m) c *= Rational(n) + a + b + m;
    for (int m = k + 1; m <= n; ++m) c *= a + m;
    return c;
}

Poly jacobi_sum(int n, const Rational& a, const Rational& b, const Poly& base,
                bool descending) {
    // descending: powers base^{n-k} (the p-form); else base^k (the P-form).
    Poly acc;
    for (int k = 0; k <= n; ++k) {
        Rational c = term_coeff(n, k, a, b);
        if (c == 0) continue;
        acc += base.pow(descending ? n - k : k) * c;
    }
    Rational nfac_inv = Rational(1) / Rational(factorial(n));
    return acc * nfac_inv;
}

Poly P(int n, const Rational& a, const Rational& b) {
    if (n < 0) return Poly();  // P_{-1} = 0 convention
    static const Poly half_xm1 = Poly::monomial(1, Rational(1, 2)) + Poly(Rational(-1, 2));
    return jacobi_sum(n, a, b, half_xm1, false);
}

Poly P(int n, const Rational& a) { return P(n, a, a); }

Poly p_lower(int n, const Rational& a, const Rational& b) {
    if (n < 0) return Poly();
    static const Poly xm1 = Poly::monomial(1) - Poly(1);
    return jacobi_sum(n, a, b, xm1, true);
}

}  // namespace

Poly jacobi_P(const JacobiParams& p) { return P(p.n, p.alpha, p.beta); }

Poly jacobi_p(const JacobiParams& p) { return p_lower(p.n, p.alpha, p.beta); }

const std::vector<IdentityName>& all_identities() {
    static const std::vector<IdentityName> ids = {
        IdentityName::symmetry, IdentityName::rec_a,      IdentityName::rec_b,
        IdentityName::diff,     IdentityName::xcomb,      IdentityName::lemma_plus,
        IdentityName::lemma_minus, IdentityName::u0_bridge,
    };
    return ids;
}

std::string identity_name(IdentityName id) {
    switch (id) {
        case IdentityName::symmetry: return "symmetry";
        case IdentityName::rec_a: return "rec_a";
        case IdentityName::rec_b: return "rec_b";
        case IdentityName::diff: return "diff";
        case IdentityName::xcomb: return "xcomb";
        case IdentityName::lemma_plus: return "lemma_plus";
        case IdentityName::lemma_minus: return "lemma_minus";
        case IdentityName::u0_bridge: return "u0_bridge";
    }
    return "?";
}

std::optional<IdentityName> identity_from_string(const std::string& s) {
    for (IdentityName id : all_identities())
        if (identity_name(id) == s) return id;
    return std::nullopt;
}

std::pair<Poly, Poly> identity_sides(IdentityName id, int n, const Rational& alpha,
                                     std::optional<Rational> beta_opt,
                                     std::optional<int> aux) {
    const Poly x = Poly::monomial(1);
    const Rational& a = alpha;
    switch (id) {
        case IdentityName::symmetry: {
            Rational b = beta_opt.value_or(alpha);
            Poly lhs = P(n, a, b);
            Poly rhs = P(n, b, a).negated_arg();
            if (n % 2) rhs = -rhs;
            return {lhs, rhs};
        }
        case IdentityName::rec_a: {
            Poly lhs = P(n, a) * (Rational(n) + 2 * a);
            Poly rhs = P(n, a - 1) * (2 * (Rational(n) + a)) +
                       x * P(n - 1, a) * (Rational(n) + a);
            return {lhs, rhs};
        }
        case IdentityName::rec_b: {
            Poly lhs = x * P(n, a) * (Rational(n) + 2 * a);
            Poly rhs = P(n + 1, a - 1) * Rational(2 * (n + 1)) +
                       P(n - 1, a) * (Rational(n) + a);
            return {lhs, rhs};
        }
        case IdentityName::diff: {
            Poly one_minus_x = Poly(1) - x;
            Poly lhs = one_minus_x * P(n, a) * (Rational(n) + 2 * a);
            Poly rhs = P(n + 1, a - 1) * Rational(-2 * (n + 1)) +
                       P(n, a - 1) * (2 * (Rational(n) + a)) -
                       one_minus_x * P(n - 1, a) * (Rational(n) + a);
            return {lhs, rhs};
        }
        case IdentityName::xcomb: {
            Poly lhs = P(n + 1, a - 1) * Rational(2 * (n + 1));
            Poly rhs = x * P(n, a - 1) * (2 * (Rational(n) + a)) +
                       (x * x - Poly(1)) * P(n - 1, a) * (Rational(n) + a);
            return {lhs, rhs};
        }
        case IdentityName::lemma_plus:
        case IdentityName::lemma_minus: {
            if (Rational(n) + a == 0)
                throw DegenerateParameterError("lemma requires n + alpha != 0");
            bool plus = id == IdentityName::lemma_plus;
            Poly base = plus ? Poly::monomial(1, Rational(-1, 2)) + Poly(Rational(1, 2))
                             : Poly::monomial(1, Rational(-1, 2)) + Poly(Rational(-1, 2));
            Poly lhs;
            for (int k = 0; k <= n; ++k)
                lhs += base.pow(n - k) * P(k, a + (n - k));
            lhs *= Rational(2);
            Rational c = (Rational(n) + 2 * a) / (Rational(n) + a);
            Poly rhs = P(n, a) * c;
            Poly prev = P(n - 1, a);
            rhs = plus ? rhs + prev : rhs - prev;
            return {lhs, rhs};
        }
        case IdentityName::u0_bridge: {
            if (!aux || *aux < 1) throw IndexError("u0_bridge requires aux >= 1");
            int i = *aux;
            int d = n;  // d = j - i
            Rational j(i + d);
            Poly xm1 = x - Poly(1);
            Poly lhs = xm1 * (p_lower(d, -j, Rational(-1)) * (j / i) +
                              xm1 * p_lower(d - 1, -j + 1, Rational(-1)) * ((j - 1) / i));
            Poly rhs = x * p_lower(d, -j, Rational(0)) - p_lower(d, -j + 2, Rational(-2));
            return {lhs, rhs};
        }
    }
    throw DomainError("unknown identity");
}

Poly identity_residual(IdentityName id, int n, const Rational& alpha,
                       std::optional<Rational> beta, std::optional<int> aux) {
    auto [lhs, rhs] = identity_sides(id, n, alpha, beta, aux);
    return lhs - rhs;
}

}  // namespace orelim
