#include "orelim/infmat.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>

#include "orelim/jacobi.hpp"

namespace orelim {

// ---------------------------------------------------------------- Minor

Minor Minor::identity(int n) {
    Minor m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

Minor Minor::operator*(const Minor& o) const {
    if (n_ != o.n_) throw DomainError("minor size mismatch in product");
    Minor out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const RatFunc& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                const RatFunc& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Minor Minor::transposed() const {
    Minor out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Minor::is_upper() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool Minor::is_lower() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool Minor::all_polynomial() const {
    for (const auto& e : a_)
        if (!e.is_polynomial()) return false;
    return true;
}

std::optional<std::pair<int, int>> Minor::first_difference(const Minor& a, const Minor& b) {
    if (a.n_ != b.n_) return std::make_pair(0, 0);
    for (int i = 1; i <= a.n_; ++i)
        for (int j = 1; j <= a.n_; ++j)
            if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

// ---------------------------------------------------------------- InfMatrix

Finiteness InfMatrix::finiteness() const {
    bool rf = row_finite(), cf = col_finite();
    if (rf && cf) return Finiteness::both;
    if (rf) return Finiteness::row_finite;
    if (cf) return Finiteness::column_finite;
    return Finiteness::unknown;
}

bool InfMatrix::row_finite() const {
    return shape == Shape::lower_triangular || shape == Shape::diagonal ||
           static_cast<bool>(row_bound);
}

bool InfMatrix::col_finite() const {
    return shape == Shape::upper_triangular || shape == Shape::diagonal ||
           static_cast<bool>(col_bound);
}

int InfMatrix::row_support(int i) const {
    if (row_bound) return row_bound(i);
    if (shape == Shape::lower_triangular || shape == Shape::diagonal) return i;
    throw ProductUndefinedError();
}

int InfMatrix::col_support(int j) const {
    if (col_bound) return col_bound(j);
    if (shape == Shape::upper_triangular || shape == Shape::diagonal) return j;
    throw ProductUndefinedError();
}

InfMatrix inf_from(std::function<RatFunc(int, int)> f, Shape shape) {
    InfMatrix m;
    m.entry = std::move(f);
    m.shape = shape;
    return m;
}

InfMatrix inf_transpose(const InfMatrix& a) {
    InfMatrix m;
    m.entry = [g = a.entry](int i, int j) { return g(j, i); };
    switch (a.shape) {
        case Shape::lower_triangular: m.shape = Shape::upper_triangular; break;
        case Shape::upper_triangular: m.shape = Shape::lower_triangular; break;
        default: m.shape = a.shape;
    }
    if (a.row_bound) m.col_bound = a.row_bound;
    if (a.col_bound) m.row_bound = a.col_bound;
    return m;
}

namespace {
Shape combine_shape(Shape a, Shape b) {
    if (a == b) return a;
    if (a == Shape::diagonal) return b;
    if (b == Shape::diagonal) return a;
    return Shape::general;
}
}  // namespace

InfMatrix inf_add(const InfMatrix& a, const InfMatrix& b) {
    InfMatrix m;
    m.entry = [f = a.entry, g = b.entry](int i, int j) { return f(i, j) + g(i, j); };
    m.shape = combine_shape(a.shape, b.shape);
    if (a.row_finite() && b.row_finite()) {
        auto ra = a.row_bound, rb = b.row_bound;
        m.row_bound = [ra, rb](int i) {
            int x = ra ? ra(i) : i;  // triangular/diagonal support ends at i
            int y = rb ? rb(i) : i;
            return std::max(x, y);
        };
    }
    return m;
}

InfMatrix inf_sub(const InfMatrix& a, const InfMatrix& b) {
    InfMatrix neg;
    neg.entry = [g = b.entry](int i, int j) { return -g(i, j); };
    neg.shape = b.shape;
    neg.row_bound = b.row_bound;
    neg.col_bound = b.col_bound;
    return inf_add(a, neg);
}

InfMatrix memoize(InfMatrix a) {
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, int>, RatFunc> entries;
    };
    auto cache = std::make_shared<Cache>();
    InfMatrix m = a;
    m.entry = [cache, g = a.entry](int i, int j) {
        std::scoped_lock lock(cache->mu);
        auto key = std::make_pair(i, j);
        auto it = cache->entries.find(key);
        if (it != cache->entries.end()) return it->second;
        RatFunc v = g(i, j);
        cache->entries.emplace(key, v);
        return v;
    };
    return m;
}

Minor minor(const InfMatrix& a, int n) {
    if (n < 1) throw IndexError("minor size must be >= 1");
    Minor m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            m.at(i, j) = a.entry(i, j);
            bool must_vanish =
                (a.shape == Shape::lower_triangular && j > i) ||
                (a.shape == Shape::upper_triangular && i > j) ||
                (a.shape == Shape::diagonal && i != j);
            if (must_vanish && !m.at(i, j).is_zero())
                throw ShapeError("shape tag violated at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
        }
    return m;
}

InfMatrix shift(const InfMatrix& a) {
    InfMatrix m;
    m.entry = [g = a.entry](int i, int j) -> RatFunc {
        if (i == 1 || j == 1) return RatFunc(i == j ? 1 : 0);
        return g(i - 1, j - 1);
    };
    m.shape = a.shape;
    if (a.row_bound) m.row_bound = [rb = a.row_bound](int i) {
        return i == 1 ? 1 : rb(i - 1) + 1;
    };
    if (a.col_bound) m.col_bound = [cb = a.col_bound](int j) {
        return j == 1 ? 1 : cb(j - 1) + 1;
    };
    return m;
}

Minor shift_minor(const Minor& m) {
    Minor out(m.size());
    out.at(1, 1) = RatFunc(1);
    for (int i = 2; i <= m.size(); ++i)
        for (int j = 2; j <= m.size(); ++j) out.at(i, j) = m.at(i - 1, j - 1);
    return out;
}

Minor product_minor(const InfMatrix& a, const InfMatrix& b, int n) {
    bool a_tri = a.shape == Shape::lower_triangular || a.shape == Shape::diagonal;
    bool b_tri = b.shape == Shape::upper_triangular || b.shape == Shape::diagonal;
    if (a_tri || b_tri) return minor(a, n) * minor(b, n);
    if (a.row_finite()) {
        Minor out(n);
        for (int i = 1; i <= n; ++i) {
            int kmax = a.row_support(i);
            for (int k = 1; k <= kmax; ++k) {
                RatFunc aik = a.entry(i, k);
                if (aik.is_zero()) continue;
                for (int j = 1; j <= n; ++j) out.at(i, j) += aik * b.entry(k, j);
            }
        }
        return out;
    }
    if (b.col_finite()) {
        Minor out(n);
        for (int j = 1; j <= n; ++j) {
            int kmax = b.col_support(j);
            for (int k = 1; k <= kmax; ++k) {
                RatFunc bkj = b.entry(k, j);
                if (bkj.is_zero()) continue;
                for (int i = 1; i <= n; ++i) out.at(i, j) += a.entry(i, k) * bkj;
            }
        }
        return out;
    }
    throw ProductUndefinedError();
}

Minor left_iterated_minor(const InfMatrix& t, int n) {
    if (t.shape != Shape::lower_triangular && t.shape != Shape::diagonal)
        throw ShapeError("iterated matrix requires a lower triangular generator");
    // s^k(T) has the identity n-minor for k >= n, so the product is finite.
    Minor acc = minor(t, n);
    InfMatrix cur = t;
    for (int k = 1; k < n; ++k) {
        cur = shift(cur);
        acc = minor(cur, n) * acc;
    }
    return acc;
}

Minor right_iterated_minor(const InfMatrix& t, int n) {
    if (t.shape != Shape::lower_triangular && t.shape != Shape::diagonal)
        throw ShapeError("iterated matrix requires a lower triangular generator");
    Minor acc = minor(t, n);
    InfMatrix cur = t;
    for (int k = 1; k < n; ++k) {
        cur = shift(cur);
        acc = acc * minor(cur, n);
    }
    return acc;
}

LUPair lu_of_minor(Minor u) {
    int n = u.size();
    Minor l = Minor::identity(n);
    for (int k = 1; k <= n; ++k) {
        const RatFunc& pivot = u.at(k, k);
        if (pivot.is_zero()) throw NoLUError(k);
        for (int i = k + 1; i <= n; ++i) {
            if (u.at(i, k).is_zero()) continue;
            RatFunc f = u.at(i, k) / pivot;
            l.at(i, k) = f;
            for (int j = k; j <= n; ++j) u.at(i, j) -= f * u.at(k, j);
        }
    }
    return {std::move(l), std::move(u)};
}

LUPair lu_minor(const InfMatrix& a, int n) { return lu_of_minor(minor(a, n)); }

Minor invert_triangular_minor(const Minor& m) {
    int n = m.size();
    bool lower = m.is_lower();
    if (!lower && !m.is_upper()) throw ShapeError("inverse requires a triangular minor");
    for (int i = 1; i <= n; ++i)
        if (m.at(i, i).is_zero()) throw SingularError("zero diagonal entry at " + std::to_string(i));
    if (!lower) return invert_triangular_minor(m.transposed()).transposed();
    Minor inv(n);
    for (int j = 1; j <= n; ++j) {
        inv.at(j, j) = RatFunc(1) / m.at(j, j);
        for (int i = j + 1; i <= n; ++i) {
            RatFunc s;
            for (int k = j; k < i; ++k) s += m.at(i, k) * inv.at(k, j);
            inv.at(i, j) = -s / m.at(i, i);
        }
    }
    return inv;
}

// ---------------------------------------------------------------- catalog

const std::vector<std::pair<std::string, MatrixName>>& catalog_names() {
    static const std::vector<std::pair<std::string, MatrixName>> names = {
        {"identity", MatrixName::identity},
        {"V", MatrixName::V},
        {"D_q", MatrixName::D_q},
        {"F", MatrixName::F},
        {"P", MatrixName::P},
        {"S", MatrixName::S},
        {"P_x", MatrixName::P_x},
        {"P_x_prime", MatrixName::P_x_prime},
        {"T0P", MatrixName::T0P},
        {"T0S", MatrixName::T0S},
        {"T0", MatrixName::T0},
        {"T0_inv", MatrixName::T0_inv},
        {"M0_tilde", MatrixName::M0_tilde},
        {"M1p_tilde", MatrixName::M1p_tilde},
        {"M2p_tilde", MatrixName::M2p_tilde},
        {"Lp_tilde", MatrixName::Lp_tilde},
        {"Lp_inv_tilde", MatrixName::Lp_inv_tilde},
        {"U1p_tilde", MatrixName::U1p_tilde},
        {"U2p_tilde", MatrixName::U2p_tilde},
        {"U0_tilde", MatrixName::U0_tilde},
        {"L0_tilde", MatrixName::L0_tilde},
        {"signed_stirling_upper", MatrixName::signed_stirling_upper},
        {"ones_lower_band", MatrixName::ones_lower_band},
    };
    return names;
}

MatrixName matrix_name_from_string(const std::string& s) {
    for (const auto& [name, id] : catalog_names())
        if (name == s) return id;
    throw CatalogError("unknown matrix name: " + s);
}

std::string matrix_name_to_string(MatrixName name) {
    for (const auto& [s, id] : catalog_names())
        if (id == name) return s;
    throw CatalogError("unnamed matrix");
}

namespace {

RatFunc int_pow_rf(const Rational& b, int e) { return RatFunc(rat_pow(b, e)); }

Poly xpoly() { return Poly::monomial(1); }

// sign (-1)^k as a Rational
Rational sgn(int k) { return k % 2 ? Rational(-1) : Rational(1); }

Poly jac_p(int n, const Rational& a, const Rational& b) {
    return jacobi_p(JacobiParams{n, a, b});
}

}  // namespace

RatFunc u_prime_raw_entry(int i, int j, bool first_kind) {
    // Elimination output, before the closed Jacobi forms:
    //   (1/(j-1)!) sum_r C(i-1,r) (j-i-r+1)_{i+r-1} (i or i-2)_{j-i-r}
    //                  (x-1)^{i-r-1} [* x for the first kind].
    if (i > j) return RatFunc(0);
    Poly xm1 = xpoly() - Poly(1);
    Poly acc;
    for (int r = 0; r <= j - i; ++r) {
        Int binom = binomial(i - 1, r);
        if (binom == 0) continue;  // also keeps the (x-1) exponent nonnegative
        Rational c = Rational(binom) * rising(Rational(j - i - r + 1), i + r - 1) *
                     rising(Rational(first_kind ? i : i - 2), j - i - r);
        if (c == 0) continue;
        acc += xm1.pow(i - r - 1) * c;
    }
    if (first_kind) acc *= xpoly();
    return RatFunc(acc * (Rational(1) / Rational(factorial(j - 1))));
}

InfMatrix catalog(MatrixName name, std::optional<Rational> q) {
    switch (name) {
        case MatrixName::identity:
            return inf_from([](int i, int j) { return RatFunc(i == j ? 1 : 0); },
                            Shape::diagonal);
        case MatrixName::V:
            return inf_from([](int i, int j) { return int_pow_rf(Rational(i), j - 1); },
                            Shape::general);
        case MatrixName::D_q: {
            if (!q) throw CatalogError("D_q requires the parameter q");
            Rational qq = *q;
            return inf_from(
                [qq](int i, int j) { return i == j ? int_pow_rf(qq, i) : RatFunc(0); },
                Shape::diagonal);
        }
        case MatrixName::F:
            return inf_from(
                [](int i, int j) {
                    return i == j ? RatFunc(Rational(factorial(i - 1))) : RatFunc(0);
                },
                Shape::diagonal);
        case MatrixName::P:
            return inf_from(
                [](int i, int j) { return RatFunc(Rational(binomial(i - 1, j - 1))); },
                Shape::lower_triangular);
        case MatrixName::S:
            return inf_from([](int i, int j) { return RatFunc(Rational(stirling2(i, j))); },
                            Shape::lower_triangular);
        case MatrixName::P_x:
            return inf_from(
                [](int i, int j) -> RatFunc {
                    if (j > i) return RatFunc(0);
                    return RatFunc(Poly::monomial(i - j, Rational(binomial(i - 1, j - 1))));
                },
                Shape::lower_triangular);
        case MatrixName::P_x_prime:
            return inf_from(
                [](int i, int j) -> RatFunc {
                    if (j > i) return RatFunc(0);
                    return RatFunc(pochhammer_poly(i - j) * Rational(binomial(i - 1, j - 1)));
                },
                Shape::lower_triangular);
        case MatrixName::T0P:
            return inf_from(
                [](int i, int j) { return RatFunc(i == j || i == j + 1 ? 1 : 0); },
                Shape::lower_triangular);
        case MatrixName::T0S:
            return inf_from(
                [](int i, int j) -> RatFunc {
                    if (i == j) return RatFunc(1);
                    if (i == j + 1) return RatFunc(Rational(j));
                    return RatFunc(0);
                },
                Shape::lower_triangular);
        case MatrixName::T0:
            return inf_from(
                [](int i, int j) -> RatFunc {
                    if (i == j) return RatFunc(1);
                    if (i == j + 1) return RatFunc(-xpoly() - Poly(1));
                    if (i == j + 2) return RatFunc(xpoly());
                    return RatFunc(0);
                },
                Shape::lower_triangular);
        case MatrixName::T0_inv:
            return inf_from(
                [](int i, int j) -> RatFunc {
                    if (j > i) return RatFunc(0);
                    Poly acc;  // 1 + x + ... + x^{i-j}
                    for (int m = 0; m <= i - j; ++m) acc += Poly::monomial(m);
                    return RatFunc(acc);
                },
                Shape::lower_triangular);
        case MatrixName::M0_tilde:
            return inf_from(
                [](int i, int j) {
                    Rational ipow = rat_pow(Rational(i), j - 1);
                    Rational mipow = rat_pow(Rational(-i), j - 1);
                    return RatFunc(Poly::monomial(i, ipow) - Poly(mipow));
                },
                Shape::general);
        case MatrixName::M1p_tilde:
            return inf_from(
                [](int i, int j) {
                    return RatFunc(
                        Poly::monomial(i, Rational(binomial(i + j - 2, j - 1))));
                },
                Shape::general);
        case MatrixName::M2p_tilde: {
            InfMatrix m = inf_from(
                [](int i, int j) {
                    return RatFunc(Rational(sgn(j - 1) * Rational(binomial(i, j - 1))));
                },
                Shape::general);
            m.row_bound = [](int i) { return i + 1; };
            return m;
        }
        case MatrixName::Lp_tilde:
        case MatrixName::L0_tilde:
            return memoize(inf_from(
                [](int i, int j) -> RatFunc {
                    if (j > i) return RatFunc(0);
                    return RatFunc(jac_p(i - j, Rational(-i), Rational(-i)) * sgn(i - j));
                },
                Shape::lower_triangular));
        case MatrixName::Lp_inv_tilde:
            return memoize(inf_from(
                [](int i, int j) -> RatFunc {
                    if (j > i) return RatFunc(0);
                    return RatFunc(jac_p(i - j, Rational(j), Rational(j)) *
                                   (sgn(i - j) * Rational(j) / Rational(i)));
                },
                Shape::lower_triangular));
        case MatrixName::U1p_tilde:
            return memoize(inf_from(
                [](int i, int j) -> RatFunc {
                    if (i > j) return RatFunc(0);
                    Poly num = jac_p(j - i, Rational(-j), Rational(0)) * xpoly() * sgn(j - i);
                    Poly xm1 = xpoly() - Poly(1);
                    int e = 2 * i - j - 1;
                    if (e >= 0) return RatFunc(num * xm1.pow(e));
                    return RatFunc(num, xm1.pow(-e));
                },
                Shape::upper_triangular));
        case MatrixName::U2p_tilde:
            return memoize(inf_from(
                [](int i, int j) -> RatFunc {
                    if (i > j) return RatFunc(0);
                    Poly num = jac_p(j - i, Rational(-j + 2), Rational(-2)) * sgn(j - i);
                    Poly xm1 = xpoly() - Poly(1);
                    int e = 2 * i - j - 1;
                    if (e >= 0) return RatFunc(num * xm1.pow(e));
                    return RatFunc(num, xm1.pow(-e));
                },
                Shape::upper_triangular));
        case MatrixName::U0_tilde:
            return memoize(inf_from(
                [](int i, int j) -> RatFunc {
                    if (i > j) return RatFunc(0);
                    Poly num = jac_p(j - i, Rational(-j), Rational(-1)) *
                               (sgn(j - i) * Rational(j) / Rational(i));
                    Poly xm1 = xpoly() - Poly(1);
                    int e = 2 * i - j;
                    if (e >= 0) return RatFunc(num * xm1.pow(e));
                    return RatFunc(num, xm1.pow(-e));
                },
                Shape::upper_triangular));
        case MatrixName::signed_stirling_upper:
            return inf_from(
                [](int i, int j) -> RatFunc {
                    if (j < i) return RatFunc(0);
                    return RatFunc(Rational(sgn(j - i) * Rational(stirling2(j, i))));
                },
                Shape::upper_triangular);
        case MatrixName::ones_lower_band:
            return inf_from([](int i, int j) { return RatFunc(i >= j ? 1 : 0); },
                            Shape::lower_triangular);
    }
    throw CatalogError("unknown matrix name");
}

// ---------------------------------------------------------------- serialization

namespace {

nlohmann::json entries_json(const Minor& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::string grid(const Minor& m) {
    std::vector<std::size_t> width(m.size(), 0);
    for (int j = 1; j <= m.size(); ++j)
        for (int i = 1; i <= m.size(); ++i)
            width[j - 1] = std::max(width[j - 1], m.at(i, j).str().size());
    std::string out;
    for (int i = 1; i <= m.size(); ++i) {
        out += "[ ";
        for (int j = 1; j <= m.size(); ++j) {
            std::string e = m.at(i, j).str();
            out += e;
            out.append(width[j - 1] - e.size() + (j == m.size() ? 0 : 2), ' ');
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace

std::string minor_to_json(const std::string& name, const Minor& m) {
    nlohmann::json j;
    j["name"] = name;
    j["n"] = m.size();
    j["entries"] = entries_json(m);
    return j.dump(2);
}

std::string minor_to_csv(const Minor& m) {
    std::string out;
    for (int i = 1; i <= m.size(); ++i) {
        for (int j = 1; j <= m.size(); ++j) {
            if (j > 1) out += ",";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

std::string minor_to_pretty(const Minor& m) { return grid(m); }

std::string lu_to_json(const std::string& name, const LUPair& lu) {
    nlohmann::json j;
    j["name"] = name;
    j["n"] = lu.L.size();
    j["L"] = entries_json(lu.L);
    j["U"] = entries_json(lu.U);
    return j.dump(2);
}

std::string lu_to_csv(const LUPair& lu) {
    std::string out;
    auto rows = [&](const Minor& m, const char* tag) {
        for (int i = 1; i <= m.size(); ++i) {
            out += tag;
            for (int j = 1; j <= m.size(); ++j) {
                out += ",";
                out += m.at(i, j).str();
            }
            out += "\n";
        }
    };
    rows(lu.L, "L");
    rows(lu.U, "U");
    return out;
}

std::string lu_to_pretty(const LUPair& lu) {
    return "L =\n" + grid(lu.L) + "U =\n" + grid(lu.U);
}

}  // namespace orelim
