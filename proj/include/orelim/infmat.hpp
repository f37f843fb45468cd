#ifndef ORELIM_INFMAT_HPP
#define ORELIM_INFMAT_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orelim/exactpoly.hpp"

namespace orelim {

// Dense n x n corner of an infinite matrix, 1-based accessors.
class Minor {
public:
    Minor() = default;
    explicit Minor(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    static Minor identity(int n);

    int size() const { return n_; }
    RatFunc& at(int i, int j) { return a_[idx(i, j)]; }
    const RatFunc& at(int i, int j) const { return a_[idx(i, j)]; }

    Minor operator*(const Minor& o) const;
    Minor transposed() const;
    bool is_upper() const;
    bool is_lower() const;
    bool all_polynomial() const;

    friend bool operator==(const Minor& a, const Minor& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend bool operator!=(const Minor& a, const Minor& b) { return !(a == b); }

    // First differing entry, if any (1-based), for witness reporting.
    static std::optional<std::pair<int, int>> first_difference(const Minor& a, const Minor& b);

private:
    int n_ = 0;
    std::vector<RatFunc> a_;
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
};

enum class Shape { lower_triangular, upper_triangular, diagonal, general };
enum class Finiteness { row_finite, column_finite, both, unknown };

// Lazily generated infinite matrix. The generator is pure and 1-based;
// shape and the optional support bounds make products decidable.
struct InfMatrix {
    std::function<RatFunc(int, int)> entry;
    Shape shape = Shape::general;
    // Largest column with a possibly-nonzero entry in row i (and dually).
    // Triangular/diagonal shapes imply bounds automatically.
    std::function<int(int)> row_bound;  // may be null
    std::function<int(int)> col_bound;  // may be null

    Finiteness finiteness() const;
    bool row_finite() const;
    bool col_finite() const;
    int row_support(int i) const;  // throws if not row-finite
    int col_support(int j) const;
};

InfMatrix inf_from(std::function<RatFunc(int, int)> f, Shape shape);
InfMatrix inf_transpose(const InfMatrix& a);
InfMatrix inf_add(const InfMatrix& a, const InfMatrix& b);
InfMatrix inf_sub(const InfMatrix& a, const InfMatrix& b);
// Observationally pure caching wrapper (internally synchronized).
InfMatrix memoize(InfMatrix a);

// Upper-left n x n corner; also spot-checks the shape tag.
Minor minor(const InfMatrix& a, int n);

// s(A) = diag(1, A).
InfMatrix shift(const InfMatrix& a);
// diag(1, upper-left (n-1)-corner of m): the n-minor of s(A) given the one of A.
Minor shift_minor(const Minor& m);

// n-minor of AB. Triangular shortcut multiplies the minors; otherwise the
// finiteness bounds supply the finitely many nonzero terms.
Minor product_minor(const InfMatrix& a, const InfMatrix& b, int n);

// n-minors of T^L = ...s^2(T)s(T)T and T^R = T s(T) s^2(T)....
Minor left_iterated_minor(const InfMatrix& t, int n);
Minor right_iterated_minor(const InfMatrix& t, int n);

struct LUPair {
    Minor L;  // unit lower triangular
    Minor U;  // upper triangular
};

// Doolittle over the fraction field; throws NoLUError(k) at the first
// singular leading minor.
LUPair lu_minor(const InfMatrix& a, int n);
LUPair lu_of_minor(Minor m);

// Exact inverse of a triangular minor (ShapeError if not triangular,
// SingularError on a zero diagonal entry).
Minor invert_triangular_minor(const Minor& m);

enum class MatrixName {
    identity, V, D_q, F, P, S, P_x, P_x_prime, T0P, T0S, T0, T0_inv,
    M0_tilde, M1p_tilde, M2p_tilde, Lp_tilde, Lp_inv_tilde,
    U1p_tilde, U2p_tilde, U0_tilde, L0_tilde, signed_stirling_upper,
    ones_lower_band,
};

const std::vector<std::pair<std::string, MatrixName>>& catalog_names();
MatrixName matrix_name_from_string(const std::string& s);  // CatalogError if unknown
std::string matrix_name_to_string(MatrixName name);

// Closed-form generator for the named matrix. q is required by D_q only.
InfMatrix catalog(MatrixName name, std::optional<Rational> q = std::nullopt);

// Raw double sums behind U1p_tilde / U2p_tilde (the elimination output
// before the closed Jacobi forms); compared entrywise by check(thm_U).
RatFunc u_prime_raw_entry(int i, int j, bool first_kind);

// Minor serialization. JSON: {"name": str, "n": int, "entries": [[poly]]}
// with canonical polynomial strings; CSV: one line per matrix row.
std::string minor_to_json(const std::string& name, const Minor& m);
std::string minor_to_csv(const Minor& m);
std::string minor_to_pretty(const Minor& m);
std::string lu_to_json(const std::string& name, const LUPair& lu);
std::string lu_to_csv(const LUPair& lu);
std::string lu_to_pretty(const LUPair& lu);

}  // namespace orelim

#endif
