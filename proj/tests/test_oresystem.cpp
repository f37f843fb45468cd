#include <doctest.h>

#include <random>

#include "orelim/oresystem.hpp"

using namespace orelim;

namespace {

OreElem E(const Rational& c, int p = 1) { return OreElem::E(c, p); }
OreElem H(const Rational& c) { return OreElem::H(c); }

OrePoly mono(const Rational& c, int a, int b, int d) {
    std::vector<OreElem> coeffs(static_cast<std::size_t>(d) + 1, OreElem(c));
    coeffs[d] = OreElem::monomial(c, a, Poly::monomial(b));
    return OrePoly(c, coeffs);
}

}  // namespace

TEST_CASE("ore multiplication") {
    Rational c(1);
    CHECK(E(c) * OreElem::one(c) == E(c));
    // HE = E(H+1) when c = 1
    CHECK(H(c) * E(c) == E(c) * (H(c) + OreElem::one(c)));

    // c = 2: E^2 H^3 is already in normal form; (H-4)^3 E^2 equals it
    Rational c2(2);
    OreElem lhs = E(c2, 2) * OreElem::monomial(c2, 0, Poly::monomial(3));
    OreElem rhs = OreElem::monomial(c2, 0, (Poly::monomial(1) - Poly(4)).pow(3)) * E(c2, 2);
    CHECK(lhs == rhs);
    CHECK(lhs == OreElem::monomial(c2, 2, Poly::monomial(3)));

    CHECK_THROWS_AS((void)(E(c) * OreElem::E(Rational(3))), AlgebraMismatchError);
    CHECK_THROWS_AS((void)(E(c) + H(Rational(3))), AlgebraMismatchError);
    // zero is shared by every algebra
    CHECK((E(c) + OreElem(Rational(3))) == E(c));
}

TEST_CASE("ore printing and parsing") {
    Rational c(0);
    OreElem two_e2 = OreElem::monomial(c, 2, Poly(2));
    CHECK(two_e2.str() == "2 E^2");
    CHECK(OreElem(c).str() == "0");
    CHECK((E(c) * Rational(-1)).str() == "-E");
    CHECK(OreElem::monomial(c, 1, Poly::monomial(2, Rational(-1, 2))).str() ==
          "-1/2 E H^2");

    OrePoly p = parse_ore_poly("1; 2 E^1 H^0 + -1/2 E^0 H^2", Rational(1));
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == OreElem::one(Rational(1)));
    CHECK(p.coeff(1) == OreElem::monomial(Rational(1), 1, Poly(2)) +
                            OreElem::monomial(Rational(1), 0,
                                              Poly::monomial(2, Rational(-1, 2))));
    CHECK(parse_ore_poly("1;2E+-1/2H^2", Rational(1)) == p);
    CHECK(parse_ore_poly("  1 ;  2 E - 1/2 H^2 ", Rational(1)) == p);
    CHECK(parse_ore_poly("E", Rational(2)) == OrePoly(Rational(2), {E(Rational(2))}));
    CHECK(parse_ore_poly("+2 E", Rational(2)) ==
          OrePoly(Rational(2), {E(Rational(2)) * Rational(2)}));
    CHECK(parse_ore_poly("0", Rational(2)).is_zero());
    CHECK(parse_ore_poly("; 1", Rational(0)).coeff(0).is_zero());

    CHECK_THROWS_AS(parse_ore_poly("1; 2 E^", Rational(1)), ParseError);
    CHECK_THROWS_AS(parse_ore_poly("@", Rational(1)), ParseError);
    CHECK_THROWS_AS(parse_ore_poly("1 1", Rational(1)), ParseError);

    // round trip through the printer
    for (const auto& text : {"1; 2 E + -1/2 H^2", "-E; H", "3 E^2 H^3 - H; ; 5"}) {
        OrePoly q = parse_ore_poly(text, Rational(1, 2));
        CHECK(parse_ore_poly(q.str(), Rational(1, 2)) == q);
    }
}

TEST_CASE("evaluation and substitution") {
    Rational c(1);
    OrePoly constant(c, {OreElem::monomial(c, 1, Poly::monomial(2))});
    CHECK(ore_eval(constant, Rational(7)) == constant.coeff(0));

    // p = E t evaluated at H + n
    OrePoly et(c, {OreElem(c), E(c)});
    CHECK(ore_eval(et, Rational(4)) ==
          E(c) * (H(c) + OreElem::scalar(c, 4)));

    // scalar sub-case: t^2 at delta = -1 gives H^2 - 2H + 1
    OrePoly t2 = OrePoly::from_scalar_poly(c, Poly::monomial(2));
    CHECK(ore_eval(t2, Rational(-1)) ==
          OreElem::monomial(c, 0, (Poly::monomial(1) - Poly(1)).pow(2)));

    // substitution t -> t + H
    CHECK(subst_t_plus_H(OrePoly(c, {OreElem::one(c)})) == OrePoly(c, {OreElem::one(c)}));
    OreElem m = OreElem::monomial(c, 1, Poly::monomial(1));  // EH
    OrePoly mt(c, {OreElem(c), m});
    OrePoly sub = subst_t_plus_H(mt);
    CHECK(sub.coeff(0) == m * H(c));
    CHECK(sub.coeff(1) == m);
    OrePoly t2sub = subst_t_plus_H(t2);
    CHECK(t2sub.coeff(0) == OreElem::monomial(c, 0, Poly::monomial(2)));
    CHECK(t2sub.coeff(1) == OreElem::monomial(c, 0, Poly::monomial(1, Rational(2))));
    CHECK(t2sub.coeff(2) == OreElem::one(c));
}

TEST_CASE("adjoint action") {
    for (const Rational& c : {Rational(0), Rational(2), Rational(-1, 2)}) {
        OrePoly ekt(c, {OreElem(c), OreElem(c), E(c, 3)});
        CHECK(ad_E(ekt).is_zero());
        OrePoly h(c, {H(c)});
        CHECK(ad_E(h) == OrePoly(c, {E(c) * (-c)}));
        CHECK(ad_E_pow(h, 2).is_zero());

        // ad_E commutes with the discrete derivatives
        OrePoly p(c, {H(c), E(c) * H(c), OreElem::monomial(c, 2, Poly::monomial(2))});
        for (const Rational& step : {Rational(1), Rational(-1, 2)})
            CHECK(ad_E(ore_dderiv(p, step, 2)) == ore_dderiv(ad_E(p), step, 2));
    }
}

TEST_CASE("system residual") {
    for (const Rational& c : {Rational(0), Rational(1), Rational(2)})
        for (int a = 0; a <= 3; ++a)
            for (int n = 1; n <= 5; ++n)
                CHECK(system_residual(OrePoly(c, {E(c, a)}), n).is_zero());

    // c = 2 family E f(t)
    Rational c2(2);
    OrePoly f = OrePoly::from_scalar_poly(c2, Poly::monomial(2) + Poly(3))
                    .left_mul(E(c2));
    for (int n = 1; n <= 5; ++n) CHECK(system_residual(f, n).is_zero());

    // c = 0, p = E t, n = 1: residual is 2 E^2
    Rational c0(0);
    OrePoly et(c0, {OreElem(c0), E(c0)});
    CHECK(system_residual(et, 1) == OreElem::monomial(c0, 2, Poly(2)));
    CHECK(system_residual(et, 1).str() == "2 E^2");
}

TEST_CASE("eq_residual properties") {
    Rational c(1, 2);
    OrePoly p = mono(c, 1, 2, 3);
    CHECK(eq_residual(p, 3, 3).is_zero());
    CHECK(eq_residual(OrePoly(c, {OreElem::one(c)}), 2, 0).is_zero());
    // deg p < k kills the equation
    CHECK(eq_residual(mono(c, 2, 1, 1), 4, 2).is_zero());
    CHECK_THROWS_AS(eq_residual(p, 2, 3), IndexError);

    for (int n = 1; n <= 4; ++n)
        CHECK(eq_residual(p, n, 0) == system_residual(p, n));
}

TEST_CASE("frozen eq_2^1 values for p = H t^2") {
    // hand elimination gives 2c(2c-3) E^2, which is N(N+1-Nc) ad_E(H) E
    // up to the (N-1)! normalization
    for (const Rational& c : {Rational(0), Rational(1), Rational(2), Rational(1, 2)}) {
        OrePoly p = mono(c, 0, 1, 2);
        OreElem expect = OreElem::monomial(c, 2, Poly(2 * c * (2 * c - 3)));
        CHECK(eq_residual(p, 2, 1) == expect);
    }
}

TEST_CASE("recursion formula spot checks") {
    CHECK(recursion_residual(mono(Rational(1), 0, 1, 2), 2, 1).is_zero());
    CHECK(recursion_residual(mono(Rational(0), 1, 1, 3), 4, 2).is_zero());
    CHECK_THROWS_AS(recursion_residual(mono(Rational(1), 0, 0, 1), 2, 2), IndexError);
}

TEST_CASE("triangular system displays") {
    // p = H t: eq_2^1 reduces to ad_E^2(H) = 0, so the residual vanishes
    for (const Rational& c : {Rational(0), Rational(1), Rational(3)}) {
        OrePoly ht = mono(c, 0, 1, 1);
        CHECK(eq_infty_residual(ht, 1).is_zero());
        CHECK(eq_infty_residual(ht, 2).is_zero());
        for (int n = 0; n <= 4; ++n)
            CHECK(eq_infty_residual(ht, n) == eq_residual(ht, n + 1, n));
    }
    CHECK_THROWS_AS(eq_infty_c0_residual(mono(Rational(1), 0, 0, 0), 1), DomainError);
    CHECK_THROWS_AS(eq_infty_c1_residual(mono(Rational(0), 0, 0, 0), 1), DomainError);
}

TEST_CASE("degree one combination") {
    CHECK(degree_one_combination(OrePoly(Rational(2), {OreElem::one(Rational(2))}))
              .is_zero());
    CHECK(degree_one_combination(mono(Rational(1), 0, 1, 1)).is_zero());
    // p = H t with generic c carries H through the combination
    for (const Rational& c : {Rational(2), Rational(3), Rational(-1), Rational(1, 2)})
        CHECK(degree_one_combination(mono(c, 0, 1, 1)).is_zero());
    for (const Rational& c : {Rational(0), Rational(2), Rational(-1)}) {
        OrePoly p(c, {H(c), E(c)});  // E t + H
        CHECK(degree_one_combination(p).is_zero());
    }
    CHECK_THROWS_AS(degree_one_combination(mono(Rational(1), 0, 0, 2)), DomainError);
}

TEST_CASE("first_N_implies_all") {
    Rational c2(2);
    OrePoly fam = OrePoly::from_scalar_poly(c2, Poly::monomial(3) - Poly::monomial(1))
                      .left_mul(E(c2));
    CHECK(first_N_implies_all(fam, 4).status == CheckStatus::pass);

    OrePoly kernel(Rational(1), {E(Rational(1), 2)});
    CHECK(first_N_implies_all(kernel, 6).status == CheckStatus::pass);

    Rational c0(0);
    OrePoly et(c0, {OreElem(c0), E(c0)});
    CheckReport r = first_N_implies_all(et, 2);
    CHECK(r.status == CheckStatus::hypothesis_not_met);
    CHECK(r.witness->actual == "2 E^2");

    // a constant that fails the first equation must be hypothesis-not-met too
    OrePoly h(Rational(1), {H(Rational(1))});
    CHECK(first_N_implies_all(h, 3).status == CheckStatus::hypothesis_not_met);

    CHECK(first_N_implies_all(OrePoly(Rational(1)), 3).status == CheckStatus::pass);
}

TEST_CASE("structural identities") {
    for (const Rational& c : {Rational(0), Rational(1), Rational(2), Rational(-1, 2)}) {
        CHECK(id3_residual(c, 1, 1).is_zero());
        CHECK(id3_residual(c, 2, 3).is_zero());
        OrePoly mt(c, {OreElem(c), OreElem::monomial(c, 1, Poly::monomial(1))});
        CHECK(id1_residual(mt).is_zero());
        CHECK(id2_residual(mt, 1).is_zero());
    }
}

TEST_CASE("representation rows") {
    for (const Rational& c : {Rational(0), Rational(1), Rational(2)}) {
        OrePoly one(c, {OreElem::one(c)});
        for (int n = 1; n <= 3; ++n) {
            CHECK(rep_row_residual(one, n, CoeffBasis::monomial).is_zero());
            CHECK(rep_row_residual(one, n, CoeffBasis::pochhammer).is_zero());
        }
    }
    // p = E t + H t^2, c = 1
    Rational c(1);
    OrePoly p(c, {OreElem(c), E(c), H(c)});
    CHECK(rep_row_residual(p, 2, CoeffBasis::monomial).is_zero());
    CHECK(rep_row_residual(p, 2, CoeffBasis::pochhammer).is_zero());

    CHECK(rep_factorization_check(Rational(1), 2, 2, CoeffBasis::monomial).status ==
          CheckStatus::pass);
    CHECK(rep_factorization_check(Rational(0), 3, 2, CoeffBasis::pochhammer).status ==
          CheckStatus::pass);
    CHECK(rep_factorization_check(Rational(2), 1, 0, CoeffBasis::monomial).status ==
          CheckStatus::pass);
}

TEST_CASE("pochhammer coefficient conversion") {
    Rational c(2);
    OrePoly p(c, {H(c), E(c), OreElem::monomial(c, 1, Poly::monomial(1))});
    auto a = ore_to_pochhammer(p);
    CHECK(ore_from_pochhammer(c, a) == p);
    // cross-check against the scalar basis change on a scalar polynomial
    Poly scalar = Poly::monomial(2) + Poly::monomial(1, Rational(3)) - Poly(5);
    OrePoly sp = OrePoly::from_scalar_poly(c, scalar);
    auto oa = ore_to_pochhammer(sp);
    std::vector<Rational> coeffs;
    for (int j = 0; j <= scalar.degree(); ++j) coeffs.push_back(scalar.coeff(j));
    auto sa = basis_change(coeffs, BasisDirection::monomial_to_pochhammer);
    for (std::size_t j = 0; j < sa.size(); ++j)
        CHECK(oa[j] == OreElem::scalar(c, sa[j]));
}

TEST_CASE("random multi-term polynomials satisfy the formula sweeps") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> expo(0, 3), coef(-3, 3), deg(0, 3);
    for (const Rational& c : {Rational(0), Rational(2), Rational(-1, 2)}) {
        for (int trial = 0; trial < 6; ++trial) {
            int d = deg(rng);
            std::vector<OreElem> coeffs;
            for (int j = 0; j <= d; ++j) {
                OreElem m(c);
                for (int t = 0; t < 2; ++t)
                    m += OreElem::monomial(c, expo(rng),
                                           Poly::monomial(expo(rng), Rational(coef(rng))));
                coeffs.push_back(m);
            }
            OrePoly p(c, coeffs);
            for (int n = 2; n <= 4; ++n)
                for (int k = 1; k < n; ++k)
                    CHECK(recursion_residual(p, n, k).is_zero());
            for (int n = 0; n <= 4; ++n)
                CHECK(eq_infty_residual(p, n) == eq_residual(p, n + 1, n));
            CHECK(id1_residual(p).is_zero());
            CHECK(id2_residual(p, 2).is_zero());
            for (int n = 1; n <= 3; ++n) {
                CHECK(rep_row_residual(p, n, CoeffBasis::monomial).is_zero());
                CHECK(rep_row_residual(p, n, CoeffBasis::pochhammer).is_zero());
            }
        }
    }
}

TEST_CASE("ore suite runner") {
    OreSweepConfig cfg;
    cfg.max_exp = 2;
    cfg.max_n = 3;
    cfg.c_values = {Rational(0), Rational(1), Rational(2)};
    auto reports = run_ore_suite(cfg);
    CHECK(reports.size() > 10);
    for (const auto& r : reports) {
        INFO(r.name);
        if (r.witness) {
            INFO("witness: expected " << r.witness->expected << " got "
                                      << r.witness->actual);
        }
        CHECK(!r.failed());
    }
}
