#ifndef ORELIM_CHECKS_HPP
#define ORELIM_CHECKS_HPP

#include <string>
#include <vector>

#include "orelim/infmat.hpp"
#include "orelim/report.hpp"

namespace orelim {

enum class CheckName {
    vandermonde_LDU,      // V = P F S^t
    pascal_inverse,       // P^{-1} = D_{-1} P D_{-1}
    pascal_recurrence,    // P = s(P) T0P = (T0P)^L
    stirling_recurrence,  // S = s(S) T0S = (T0S)^L
    right_iterated_forms, // P = ones^R, S = P^R
    vandermonde_periodic, // bidiagonal fundamental sequence eliminates V
    basis_relation,       // coefficient conversion = D_{-1} s(S)^t D_{-1}
    M_relation,           // M0~ = (M1'~ - M2'~) F D_{-1} s(S)^t D_{-1}
    periodic_M0,          // T0^L M0~ is upper triangular
    thm_L0,               // Lp~ = (T0^{-1})^R and Lp~^{-1} = T0^L
    biorthogonality,      // product of the two triangular Jacobi minors = I
    thm_U,                // raw elimination sums = closed Jacobi forms
    lu_Mprime,            // M1'~ - M2'~ = Lp~ (U1'~ - U2'~), matches generic LU
    lu_M0,                // M0~ = Lp~ U0~ F signed_stirling_upper, matches LU
};

const std::vector<CheckName>& all_checks();
std::string check_name(CheckName c);
CheckName check_from_string(const std::string& s);  // CatalogError if unknown

// Bounded verification of the named identity on n-minors.
CheckReport check(CheckName name, int n);

// All matrix checks at the given depth, in registry order.
std::vector<CheckReport> run_matrix_suite(int depth);

// The Jacobi identity sweep. Emits one aggregated report per (identity, n)
// plus one skipped-degenerate report per excluded parameter point.
std::vector<CheckReport> run_jacobi_suite(int depth_main, int depth_lemma, int depth_bridge);

const std::vector<Rational>& jacobi_parameter_sample();

}  // namespace orelim

#endif
