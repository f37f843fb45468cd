#ifndef ORELIM_JACOBI_HPP
#define ORELIM_JACOBI_HPP

#include <optional>
#include <string>
#include <vector>

#include "orelim/exactpoly.hpp"

namespace orelim {

struct JacobiParams {
    int n = 0;  // degree index, >= 0 (the P_{-1} = 0 convention lives in the
                // evaluators, which accept n = -1 and return the zero poly)
    Rational alpha;
    Rational beta;
};

// Jacobi polynomial P_n^{alpha,beta} from the defining finite sum
//   (1/n!) sum_k C(n,k) prod_{m=1..k}(n+a+b+m) prod_{m=k+1..n}(a+m) ((x-1)/2)^k.
// Total for every rational alpha, beta; degree may drop for degenerate
// integer parameters. P_0 = 1, P_{-1} = 0.
Poly jacobi_P(const JacobiParams& p);

// p_n^{alpha,beta}(x) = (x-1)^n P_n^{alpha,beta}((x+1)/(x-1)), computed from
// the denominator-free expansion
//   (1/n!) sum_k C(n,k) prod_{m=1..k}(n+a+b+m) prod_{m=k+1..n}(a+m) (x-1)^{n-k}.
Poly jacobi_p(const JacobiParams& p);

enum class IdentityName {
    symmetry,     // P_n^{a,b}(x) = (-1)^n P_n^{b,a}(-x)
    rec_a,        // (n+2a)P_n^{a,a} = 2(n+a)P_n^{a-1,a-1} + x(n+a)P_{n-1}^{a,a}
    rec_b,        // x(n+2a)P_n^{a,a} = 2(n+1)P_{n+1}^{a-1,a-1} + (n+a)P_{n-1}^{a,a}
    diff,         // difference of the previous two
    xcomb,        // 2(n+1)P_{n+1}^{a-1,a-1} = 2x(n+a)P_n^{a-1,a-1} + (x^2-1)(n+a)P_{n-1}^{a,a}
    lemma_plus,   // 2 sum_k ((1-x)/2)^{n-k} P_k^{a+n-k,a+n-k} = ((n+2a)/(n+a))P_n^{a,a} + P_{n-1}^{a,a}
    lemma_minus,  // same with (-1-x)/2 and -P_{n-1}
    u0_bridge,    // (x-1)[(j/i)p_d^{-j,-1} + ((j-1)/i)(x-1)p_{d-1}^{-j+1,-1}]
                  //   = x p_d^{-j,0} - p_d^{-j+2,-2},  j = i + d
};

const std::vector<IdentityName>& all_identities();
std::string identity_name(IdentityName id);
std::optional<IdentityName> identity_from_string(const std::string& s);

// LHS - RHS of the named identity; the zero polynomial certifies it.
// beta is used by `symmetry` only (defaults to alpha); aux is the row index
// i >= 1 of `u0_bridge` (n plays the role of d = j - i there).
// Throws DegenerateParameterError when lemma_plus/lemma_minus hit n+alpha=0,
// IndexError when u0_bridge gets aux < 1.
Poly identity_residual(IdentityName id, int n, const Rational& alpha,
                       std::optional<Rational> beta = std::nullopt,
                       std::optional<int> aux = std::nullopt);

// Both sides separately; residual = first - second. Used by the tests that
// pin individual sides and by the x -> -x transport assertion.
std::pair<Poly, Poly> identity_sides(IdentityName id, int n, const Rational& alpha,
                                     std::optional<Rational> beta = std::nullopt,
                                     std::optional<int> aux = std::nullopt);

}  // namespace orelim

#endif
