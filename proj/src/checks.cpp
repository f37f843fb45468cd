#include "orelim/checks.hpp"

#include "orelim/jacobi.hpp"

namespace orelim {

namespace {

void expect_equal(CheckReport& r, const Minor& expected, const Minor& actual) {
    if (r.failed()) return;
    auto diff = Minor::first_difference(expected, actual);
    if (!diff) return;
    r.status = CheckStatus::fail;
    Witness w;
    w.i = diff->first;
    w.j = diff->second;
    w.expected = expected.at(w.i, w.j).str();
    w.actual = actual.at(w.i, w.j).str();
    r.witness = w;
}

void expect_upper(CheckReport& r, const Minor& m) {
    if (r.failed()) return;
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j < i; ++j)
            if (!m.at(i, j).is_zero()) {
                r.status = CheckStatus::fail;
                r.witness = Witness{i, j, "0", m.at(i, j).str()};
                return;
            }
}

void expect_polynomial(CheckReport& r, const Minor& m) {
    if (r.failed()) return;
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j)
            if (!m.at(i, j).is_polynomial()) {
                r.status = CheckStatus::fail;
                r.witness = Witness{i, j, "a polynomial entry", m.at(i, j).str()};
                return;
            }
}

// Bidiagonal fundamental sequence of the Vandermonde elimination.
InfMatrix vandermonde_T0() {
    return inf_from(
        [](int i, int j) -> RatFunc {
            if (i == j) return RatFunc(1);
            if (i == j + 1) return RatFunc(-1);
            return RatFunc(0);
        },
        Shape::lower_triangular);
}

Minor conversion_minor(int n) {
    // D_{-1} s(S)^t D_{-1} on n-minors.
    InfMatrix dm1 = catalog(MatrixName::D_q, Rational(-1));
    InfMatrix sst = inf_transpose(shift(catalog(MatrixName::S)));
    return minor(dm1, n) * minor(sst, n) * minor(dm1, n);
}

void run_check(CheckName name, int n, CheckReport& r) {
    switch (name) {
        case CheckName::vandermonde_LDU: {
            Minor v = minor(catalog(MatrixName::V), n);
            Minor p = minor(catalog(MatrixName::P), n);
            Minor f = minor(catalog(MatrixName::F), n);
            Minor st = minor(catalog(MatrixName::S), n).transposed();
            expect_equal(r, v, p * f * st);
            break;
        }
        case CheckName::pascal_inverse: {
            Minor p = minor(catalog(MatrixName::P), n);
            Minor dm1 = minor(catalog(MatrixName::D_q, Rational(-1)), n);
            expect_equal(r, invert_triangular_minor(p), dm1 * p * dm1);
            break;
        }
        case CheckName::pascal_recurrence: {
            InfMatrix p = catalog(MatrixName::P);
            InfMatrix t = catalog(MatrixName::T0P);
            expect_equal(r, minor(p, n), minor(shift(p), n) * minor(t, n));
            expect_equal(r, minor(p, n), left_iterated_minor(t, n));
            break;
        }
        case CheckName::stirling_recurrence: {
            InfMatrix s = catalog(MatrixName::S);
            InfMatrix t = catalog(MatrixName::T0S);
            expect_equal(r, minor(s, n), minor(shift(s), n) * minor(t, n));
            expect_equal(r, minor(s, n), left_iterated_minor(t, n));
            break;
        }
        case CheckName::right_iterated_forms: {
            expect_equal(r, minor(catalog(MatrixName::P), n),
                         right_iterated_minor(catalog(MatrixName::ones_lower_band), n));
            expect_equal(r, minor(catalog(MatrixName::S), n),
                         right_iterated_minor(catalog(MatrixName::P), n));
            break;
        }
        case CheckName::vandermonde_periodic: {
            InfMatrix t0 = vandermonde_T0();
            Minor elim = left_iterated_minor(t0, n) * minor(catalog(MatrixName::V), n);
            expect_upper(r, elim);
            LUPair lu = lu_minor(catalog(MatrixName::V), n);
            Minor fundamental = shift_minor(lu.L) * invert_triangular_minor(lu.L);
            expect_equal(r, minor(t0, n), fundamental);
            break;
        }
        case CheckName::basis_relation: {
            Minor conv = conversion_minor(n);
            // Column j of the conversion matrix is basis_change applied to e_j.
            for (int j = 1; j <= n && !r.failed(); ++j) {
                std::vector<Rational> e(n, Rational(0));
                e[j - 1] = 1;
                auto a = basis_change(e, BasisDirection::monomial_to_pochhammer);
                for (int i = 1; i <= n; ++i) {
                    if (RatFunc(a[i - 1]) != conv.at(i, j)) {
                        r.status = CheckStatus::fail;
                        r.witness =
                            Witness{i, j, conv.at(i, j).str(), to_string(a[i - 1])};
                        break;
                    }
                }
            }
            break;
        }
        case CheckName::M_relation: {
            Minor m0 = minor(catalog(MatrixName::M0_tilde), n);
            Minor mp = minor(inf_sub(catalog(MatrixName::M1p_tilde),
                                     catalog(MatrixName::M2p_tilde)),
                             n);
            Minor f = minor(catalog(MatrixName::F), n);
            expect_equal(r, m0, mp * f * conversion_minor(n));
            break;
        }
        case CheckName::periodic_M0: {
            Minor elim = left_iterated_minor(catalog(MatrixName::T0), n) *
                         minor(catalog(MatrixName::M0_tilde), n);
            expect_upper(r, elim);
            break;
        }
        case CheckName::thm_L0: {
            expect_equal(r, minor(catalog(MatrixName::Lp_tilde), n),
                         right_iterated_minor(catalog(MatrixName::T0_inv), n));
            expect_equal(r, minor(catalog(MatrixName::Lp_inv_tilde), n),
                         left_iterated_minor(catalog(MatrixName::T0), n));
            break;
        }
        case CheckName::biorthogonality: {
            Minor lp = minor(catalog(MatrixName::Lp_tilde), n);
            Minor lpinv = minor(catalog(MatrixName::Lp_inv_tilde), n);
            expect_equal(r, Minor::identity(n), lp * lpinv);
            expect_equal(r, Minor::identity(n), lpinv * lp);
            // The unsigned display: (j/i) p_{i-j}^{j,j} against p_{i-j}^{-i,-i}.
            Minor left(n), right(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= i; ++j) {
                    left.at(i, j) = RatFunc(
                        jacobi_p({i - j, Rational(j), Rational(j)}) *
                        (Rational(j) / Rational(i)));
                    right.at(i, j) =
                        RatFunc(jacobi_p({i - j, Rational(-i), Rational(-i)}));
                }
            expect_equal(r, Minor::identity(n), left * right);
            break;
        }
        case CheckName::thm_U: {
            Minor u1 = minor(catalog(MatrixName::U1p_tilde), n);
            Minor u2 = minor(catalog(MatrixName::U2p_tilde), n);
            Minor raw1(n), raw2(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    raw1.at(i, j) = u_prime_raw_entry(i, j, true);
                    raw2.at(i, j) = u_prime_raw_entry(i, j, false);
                }
            expect_equal(r, raw1, u1);
            expect_equal(r, raw2, u2);
            expect_polynomial(r, u1);
            expect_polynomial(r, u2);
            break;
        }
        case CheckName::lu_Mprime: {
            InfMatrix mp = inf_sub(catalog(MatrixName::M1p_tilde),
                                   catalog(MatrixName::M2p_tilde));
            Minor l = minor(catalog(MatrixName::Lp_tilde), n);
            Minor u = minor(inf_sub(catalog(MatrixName::U1p_tilde),
                                    catalog(MatrixName::U2p_tilde)),
                            n);
            expect_equal(r, minor(mp, n), l * u);
            LUPair lu = lu_minor(mp, n);
            expect_equal(r, l, lu.L);
            expect_equal(r, u, lu.U);
            expect_polynomial(r, lu.L);
            expect_polynomial(r, lu.U);
            break;
        }
        case CheckName::lu_M0: {
            InfMatrix m0 = catalog(MatrixName::M0_tilde);
            Minor l = minor(catalog(MatrixName::Lp_tilde), n);
            Minor u = minor(catalog(MatrixName::U0_tilde), n) *
                      minor(catalog(MatrixName::F), n) *
                      minor(catalog(MatrixName::signed_stirling_upper), n);
            expect_equal(r, minor(m0, n), l * u);
            LUPair lu = lu_minor(m0, n);
            expect_equal(r, l, lu.L);
            expect_equal(r, u, lu.U);
            expect_polynomial(r, lu.L);
            expect_polynomial(r, lu.U);
            break;
        }
    }
}

}  // namespace

const std::vector<CheckName>& all_checks() {
    static const std::vector<CheckName> names = {
        CheckName::vandermonde_LDU,      CheckName::pascal_inverse,
        CheckName::pascal_recurrence,    CheckName::stirling_recurrence,
        CheckName::right_iterated_forms, CheckName::vandermonde_periodic,
        CheckName::basis_relation,       CheckName::M_relation,
        CheckName::periodic_M0,          CheckName::thm_L0,
        CheckName::biorthogonality,      CheckName::thm_U,
        CheckName::lu_Mprime,            CheckName::lu_M0,
    };
    return names;
}

std::string check_name(CheckName c) {
    switch (c) {
        case CheckName::vandermonde_LDU: return "vandermonde_LDU";
        case CheckName::pascal_inverse: return "pascal_inverse";
        case CheckName::pascal_recurrence: return "pascal_recurrence";
        case CheckName::stirling_recurrence: return "stirling_recurrence";
        case CheckName::right_iterated_forms: return "right_iterated_forms";
        case CheckName::vandermonde_periodic: return "vandermonde_periodic";
        case CheckName::basis_relation: return "basis_relation";
        case CheckName::M_relation: return "M_relation";
        case CheckName::periodic_M0: return "periodic_M0";
        case CheckName::thm_L0: return "thm_L0";
        case CheckName::biorthogonality: return "biorthogonality";
        case CheckName::thm_U: return "thm_U";
        case CheckName::lu_Mprime: return "lu_Mprime";
        case CheckName::lu_M0: return "lu_M0";
    }
    return "?";
}

CheckName check_from_string(const std::string& s) {
    for (CheckName c : all_checks())
        if (check_name(c) == s) return c;
    throw CatalogError("unknown check name: " + s);
}

CheckReport check(CheckName name, int n) {
    if (n < 1) throw IndexError("check depth must be >= 1");
    return timed_check(check_name(name), {{"n", std::to_string(n)}},
                       [&](CheckReport& r) { run_check(name, n, r); });
}

std::vector<CheckReport> run_matrix_suite(int depth) {
    std::vector<CheckReport> out;
    for (CheckName c : all_checks()) out.push_back(check(c, depth));
    return out;
}

const std::vector<Rational>& jacobi_parameter_sample() {
    static const std::vector<Rational> sample = {
        Rational(-4), Rational(-7, 2), Rational(-3), Rational(-2), Rational(-1),
        Rational(-1, 2), Rational(0),  Rational(1, 2), Rational(1), Rational(2),
        Rational(3)};
    return sample;
}

std::vector<CheckReport> run_jacobi_suite(int depth_main, int depth_lemma,
                                          int depth_bridge) {
    std::vector<CheckReport> out;
    const auto& sample = jacobi_parameter_sample();

    auto sweep = [&](IdentityName id, int depth) {
        for (int n = 0; n <= depth; ++n) {
            std::vector<CheckReport> skipped;
            CheckReport agg = timed_check(
                identity_name(id),
                {{"n", std::to_string(n)}}, [&](CheckReport& r) {
                    for (const Rational& a : sample) {
                        std::vector<Rational> betas;
                        if (id == IdentityName::symmetry)
                            betas = sample;
                        else
                            betas = {a};
                        for (const Rational& b : betas) {
                            try {
                                Poly res = identity_residual(id, n, a, b);
                                if (!res.is_zero()) {
                                    r.status = CheckStatus::fail;
                                    r.witness = Witness{n, 0, "0", res.str()};
                                    r.parameters["alpha"] = to_string(a);
                                    if (id == IdentityName::symmetry)
                                        r.parameters["beta"] = to_string(b);
                                    return;
                                }
                            } catch (const DegenerateParameterError&) {
                                CheckReport skip;
                                skip.name = identity_name(id);
                                skip.parameters = {{"n", std::to_string(n)},
                                                   {"alpha", to_string(a)}};
                                skip.status = CheckStatus::skipped_degenerate;
                                skipped.push_back(skip);
                            }
                        }
                    }
                });
            if (!skipped.empty())
                agg.parameters["skipped"] = std::to_string(skipped.size());
            out.push_back(agg);
            for (auto& s : skipped) out.push_back(std::move(s));
        }
    };

    sweep(IdentityName::symmetry, depth_main);
    sweep(IdentityName::rec_a, depth_main);
    sweep(IdentityName::rec_b, depth_main);
    sweep(IdentityName::diff, depth_main);
    sweep(IdentityName::xcomb, depth_main);
    sweep(IdentityName::lemma_plus, depth_lemma);
    sweep(IdentityName::lemma_minus, depth_lemma);

    // Transport check: lemma_minus is lemma_plus under x -> -x and parity.
    out.push_back(timed_check("lemma_transport", {{"n", std::to_string(depth_lemma)}},
                              [&](CheckReport& r) {
        for (int n = 0; n <= depth_lemma && !r.failed(); ++n)
            for (const Rational& a : sample) {
                if (Rational(n) + a == 0) continue;
                auto plus = identity_sides(IdentityName::lemma_plus, n, a);
                auto minus = identity_sides(IdentityName::lemma_minus, n, a);
                Rational s = n % 2 ? Rational(-1) : Rational(1);
                if (plus.first.negated_arg() * s != minus.first ||
                    plus.second.negated_arg() * s != minus.second) {
                    r.status = CheckStatus::fail;
                    r.witness = Witness{n, 0, (plus.first.negated_arg() * s).str(),
                                        minus.first.str()};
                    r.parameters["alpha"] = to_string(a);
                    return;
                }
            }
    }));

    // u0_bridge over 1 <= i <= j <= depth (d = j - i).
    for (int d = 0; d <= depth_bridge - 1; ++d) {
        out.push_back(timed_check("u0_bridge", {{"d", std::to_string(d)}},
                                  [&](CheckReport& r) {
            for (int i = 1; i + d <= depth_bridge; ++i) {
                Poly res = identity_residual(IdentityName::u0_bridge, d, Rational(0),
                                             std::nullopt, i);
                if (!res.is_zero()) {
                    r.status = CheckStatus::fail;
                    r.witness = Witness{i, i + d, "0", res.str()};
                    return;
                }
            }
        }));
    }
    return out;
}

}  // namespace orelim
