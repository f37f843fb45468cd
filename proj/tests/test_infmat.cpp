#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "orelim/infmat.hpp"

using namespace orelim;

namespace {


Minor from_strings(const std::vector<std::vector<std::string>>& rows) {
    Minor m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) =
                RatFunc(Poly::parse(rows[i][j]));
    return m;
}

}  // namespace

TEST_CASE("minor extraction and shape checking") {
    CHECK(minor(catalog(MatrixName::identity), 3) == Minor::identity(3));
    CHECK(minor(catalog(MatrixName::T0_inv), 3) ==
          from_strings({{"1", "0", "0"}, {"x + 1", "1", "0"}, {"x^2 + x + 1", "x + 1", "1"}}));
    CHECK(minor(catalog(MatrixName::M0_tilde), 2) ==
          from_strings({{"x - 1", "x + 1"}, {"x^2 - 1", "2*x^2 + 2"}}));

    InfMatrix liar = inf_from([](int, int) { return RatFunc(1); }, Shape::lower_triangular);
    CHECK_THROWS_AS(minor(liar, 2), ShapeError);
    CHECK_THROWS_AS(minor(catalog(MatrixName::P), 0), IndexError);

    // generators are deterministic
    InfMatrix m = catalog(MatrixName::Lp_tilde);
    CHECK(m.entry(4, 2) == m.entry(4, 2));
}

TEST_CASE("catalog entries") {
    CHECK(catalog(MatrixName::M0_tilde).entry(3, 4) ==
          RatFunc(Poly::monomial(3, Rational(27)) + Poly(27)));
    CHECK(catalog(MatrixName::Lp_tilde).entry(3, 2) ==
          RatFunc(Poly::monomial(1, Rational(2)) + Poly(2)));
    CHECK(catalog(MatrixName::signed_stirling_upper).entry(2, 4) == RatFunc(7));
    CHECK(catalog(MatrixName::P_x).entry(4, 2) == RatFunc(Poly::monomial(2, Rational(3))));
    CHECK(catalog(MatrixName::P_x_prime).entry(4, 2) ==
          RatFunc(pochhammer_poly(2) * Rational(3)));
    CHECK(catalog(MatrixName::V).entry(4, 3) == RatFunc(16));
    CHECK(catalog(MatrixName::D_q, Rational(-1)).entry(3, 3) == RatFunc(-1));
    CHECK(catalog(MatrixName::F).entry(4, 4) == RatFunc(6));
    CHECK(catalog(MatrixName::T0S).entry(4, 3) == RatFunc(3));
    CHECK_THROWS_AS(catalog(MatrixName::D_q), CatalogError);
    CHECK_THROWS_AS(matrix_name_from_string("nope"), CatalogError);

    // the closed forms with negative (x-1) powers reduce to polynomials
    for (int i = 1; i <= 10; ++i)
        for (int j = i; j <= 10; ++j) {
            CHECK(catalog(MatrixName::U1p_tilde).entry(i, j).is_polynomial());
            CHECK(catalog(MatrixName::U2p_tilde).entry(i, j).is_polynomial());
            CHECK(catalog(MatrixName::U0_tilde).entry(i, j).is_polynomial());
        }
}

TEST_CASE("shift") {
    CHECK(minor(shift(catalog(MatrixName::identity)), 4) == Minor::identity(4));
    CHECK(minor(shift(catalog(MatrixName::T0)), 3) ==
          from_strings({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "-x - 1", "1"}}));
    InfMatrix p = catalog(MatrixName::P);
    CHECK(shift(shift(p)).entry(3, 3) == p.entry(1, 1));
    Minor pm = minor(p, 4);
    CHECK(shift_minor(pm) == minor(shift(p), 4));
}

TEST_CASE("product minors") {
    CHECK(product_minor(catalog(MatrixName::P), catalog(MatrixName::identity), 4) ==
          minor(catalog(MatrixName::P), 4));

    InfMatrix bidiag = inf_from(
        [](int i, int j) -> RatFunc {
            if (i == j) return RatFunc(1);
            if (i == j + 1) return RatFunc(-1);
            return RatFunc(0);
        },
        Shape::lower_triangular);
    CHECK(product_minor(bidiag, catalog(MatrixName::V), 2) ==
          from_strings({{"1", "1"}, {"0", "1"}}));

    // V = P F S^t entrywise on minors
    for (int n = 1; n <= 8; ++n) {
        Minor chain = product_minor(catalog(MatrixName::P), catalog(MatrixName::F), n) *
                      minor(inf_transpose(catalog(MatrixName::S)), n);
        CHECK(chain == minor(catalog(MatrixName::V), n));
    }

    // triangular shortcut agrees with the direct bounded sum
    {
        InfMatrix t0 = catalog(MatrixName::T0);
        InfMatrix v0 = catalog(MatrixName::V);
        Minor fast = product_minor(t0, v0, 4);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                RatFunc s;
                for (int k = 1; k <= i; ++k) s += t0.entry(i, k) * v0.entry(k, j);
                CHECK(fast.at(i, j) == s);
            }
    }

    // undecidable: both factors general with no bounds
    CHECK_THROWS_AS(
        product_minor(catalog(MatrixName::V), catalog(MatrixName::M0_tilde), 3),
        ProductUndefinedError);

    // row-finite path: M2p_tilde has bounded rows; verify against a direct sum
    InfMatrix m2 = catalog(MatrixName::M2p_tilde);
    InfMatrix v = catalog(MatrixName::V);
    Minor prod = product_minor(m2, v, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            RatFunc s;
            for (int k = 1; k <= i + 1; ++k) s += m2.entry(i, k) * v.entry(k, j);
            CHECK(prod.at(i, j) == s);
        }
}

TEST_CASE("iterated minors") {
    CHECK(left_iterated_minor(catalog(MatrixName::T0P), 4) ==
          minor(catalog(MatrixName::P), 4));
    CHECK(left_iterated_minor(catalog(MatrixName::T0S), 5) ==
          minor(catalog(MatrixName::S), 5));
    CHECK(left_iterated_minor(catalog(MatrixName::identity), 5) == Minor::identity(5));
    CHECK(right_iterated_minor(catalog(MatrixName::ones_lower_band), 4) ==
          minor(catalog(MatrixName::P), 4));
    CHECK(right_iterated_minor(catalog(MatrixName::P), 5) ==
          minor(catalog(MatrixName::S), 5));

    Minor r3 = right_iterated_minor(catalog(MatrixName::T0_inv), 3);
    CHECK(r3.at(3, 1) == RatFunc(Poly::parse("x^2 + x + 1")));
    CHECK(r3.at(3, 2) == RatFunc(Poly::parse("2*x + 2")));
    CHECK(r3.at(3, 3) == RatFunc(1));

    CHECK_THROWS_AS(left_iterated_minor(catalog(MatrixName::V), 3), ShapeError);
    CHECK_THROWS_AS(right_iterated_minor(catalog(MatrixName::M0_tilde), 3), ShapeError);
}

TEST_CASE("iterated fixed point laws") {
    for (MatrixName name : {MatrixName::T0, MatrixName::T0P, MatrixName::T0S}) {
        InfMatrix t = catalog(name);
        for (int n = 1; n <= 12; ++n) {
            Minor left = left_iterated_minor(t, n);
            CHECK(left == shift_minor(left) * minor(t, n));
            Minor right = right_iterated_minor(t, n);
            CHECK(right == minor(t, n) * shift_minor(right));
        }
    }
}

TEST_CASE("lu_minor") {
    LUPair id = lu_minor(catalog(MatrixName::identity), 4);
    CHECK(id.L == Minor::identity(4));
    CHECK(id.U == Minor::identity(4));

    LUPair v = lu_minor(catalog(MatrixName::V), 4);
    CHECK(v.L == minor(catalog(MatrixName::P), 4));
    CHECK(v.U == minor(catalog(MatrixName::F), 4) *
                     minor(inf_transpose(catalog(MatrixName::S)), 4));

    LUPair m0 = lu_minor(catalog(MatrixName::M0_tilde), 3);
    CHECK(m0.L == from_strings({{"1", "0", "0"},
                                {"x + 1", "1", "0"},
                                {"x^2 + x + 1", "2*x + 2", "1"}}));
    CHECK(m0.U == from_strings({{"x - 1", "x + 1", "x - 1"},
                                {"0", "x^2 - 2*x + 1", "3*x^2 - 3"},
                                {"0", "0", "2*x^3 - 6*x^2 + 6*x - 2"}}));
    CHECK(m0.L.all_polynomial());
    CHECK(m0.U.all_polynomial());

    // zero pivot reports the failing leading minor
    InfMatrix zero_corner = inf_from(
        [](int i, int j) { return RatFunc((i == 1 && j == 1) ? 0 : 1); }, Shape::general);
    CHECK_THROWS_AS(lu_minor(zero_corner, 2), NoLUError);
    InfMatrix ones = inf_from([](int, int) { return RatFunc(1); }, Shape::general);
    try {
        lu_minor(ones, 3);
        CHECK(false);
    } catch (const NoLUError& e) {
        CHECK(e.failing_minor == 2);
    }
}

TEST_CASE("triangular inversion") {
    CHECK(invert_triangular_minor(minor(catalog(MatrixName::T0), 3)) ==
          minor(catalog(MatrixName::T0_inv), 3));
    CHECK(invert_triangular_minor(Minor::identity(5)) == Minor::identity(5));

    InfMatrix dm1 = catalog(MatrixName::D_q, Rational(-1));
    Minor p4 = minor(catalog(MatrixName::P), 4);
    CHECK(invert_triangular_minor(p4) ==
          minor(dm1, 4) * p4 * minor(dm1, 4));

    for (int n = 1; n <= 8; ++n) {
        Minor t = minor(catalog(MatrixName::T0), n);
        CHECK(invert_triangular_minor(t) * t == Minor::identity(n));
        Minor u = minor(catalog(MatrixName::U0_tilde), n);
        CHECK(u * invert_triangular_minor(u) == Minor::identity(n));
    }

    CHECK_THROWS_AS(invert_triangular_minor(minor(catalog(MatrixName::M0_tilde), 3)),
                    ShapeError);
    Minor sing(2);
    sing.at(2, 1) = RatFunc(1);
    CHECK_THROWS_AS(invert_triangular_minor(sing), SingularError);
}

TEST_CASE("finiteness tags and catalog names") {
    CHECK(catalog(MatrixName::P).finiteness() == Finiteness::row_finite);
    CHECK(catalog(MatrixName::signed_stirling_upper).finiteness() ==
          Finiteness::column_finite);
    CHECK(catalog(MatrixName::F).finiteness() == Finiteness::both);
    CHECK(catalog(MatrixName::V).finiteness() == Finiteness::unknown);
    CHECK(catalog(MatrixName::M2p_tilde).finiteness() == Finiteness::row_finite);
    CHECK(catalog(MatrixName::M2p_tilde).row_support(4) == 5);

    for (const auto& [name, id] : catalog_names()) {
        CHECK(matrix_name_to_string(id) == name);
        CHECK(matrix_name_from_string(name) == id);
    }
}

TEST_CASE("lu round-trips random triangular products") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
    auto random_poly_entry = [&] {
        Poly p;
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) p += Poly::monomial(k, Rational(coef(rng)));
        return RatFunc(p);
    };
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + trial % 4;
        Minor l = Minor::identity(n), u(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j < i; ++j) l.at(i, j) = random_poly_entry();
            u.at(i, i) = RatFunc(Poly::monomial(1) + Poly(Rational(trial + i)));
            for (int j = i + 1; j <= n; ++j) u.at(i, j) = random_poly_entry();
        }
        LUPair lu = lu_of_minor(l * u);
        CHECK(lu.L == l);
        CHECK(lu.U == u);
        CHECK(lu.L * lu.U == l * u);
    }
}

TEST_CASE("memoize is observationally pure") {
    int calls = 0;
    InfMatrix raw = inf_from(
        [&calls](int i, int j) {
            ++calls;
            return RatFunc(Rational(i * 10 + j));
        },
        Shape::general);
    InfMatrix cached = memoize(raw);
    RatFunc a = cached.entry(2, 3);
    RatFunc b = cached.entry(2, 3);
    CHECK(a == b);
    CHECK(calls == 1);
    CHECK(a == RatFunc(23));
}

TEST_CASE("minor serialization") {
    Minor m = minor(catalog(MatrixName::M0_tilde), 2);
    std::string json = minor_to_json("M0_tilde", m);
    auto parsed = nlohmann::json::parse(json);
    CHECK(parsed["name"] == "M0_tilde");
    CHECK(parsed["n"] == 2);
    CHECK(parsed["entries"][0][0] == "x - 1");
    CHECK(parsed["entries"][1][1] == "2*x^2 + 2");
    // byte-identical round trip
    CHECK(parsed.dump(2) == json);

    CHECK(minor_to_csv(m) == "x - 1,x + 1\nx^2 - 1,2*x^2 + 2\n");
    std::string pretty = minor_to_pretty(m);
    CHECK(pretty.find("x^2 - 1") != std::string::npos);

    LUPair lu = lu_minor(catalog(MatrixName::M0_tilde), 2);
    auto lj = nlohmann::json::parse(lu_to_json("M0_tilde", lu));
    CHECK(lj["L"][1][0] == "x + 1");
    CHECK(lj["U"][1][1] == "x^2 - 2*x + 1");
}
