#include <random>

#include "doctest.h"
#include "symrees/errors.hpp"
#include "symrees/polyring.hpp"

using namespace symrees;

namespace {

RingPtr qxyz(MonomialOrder ord = MonomialOrder::grevlex()) {
    return RingContext::make(FieldConfig::rationals(), {"x", "y", "z"}, ord);
}

RingPtr qxyzw() {
    return RingContext::make(FieldConfig::rationals(), {"x", "y", "z", "w"},
                             MonomialOrder::grevlex());
}

Monomial mono(std::vector<int32_t> e) { return Monomial(std::move(e)); }

} // namespace

TEST_CASE("polynomial arithmetic on the paper identities") {
    auto R = qxyz();
    Polynomial r = parse_polynomial(R, "y^3 - z^3");
    Polynomial s = parse_polynomial(R, "z^3 - x^3");
    Polynomial t = parse_polynomial(R, "x^3 - y^3");
    CHECK((r + s + t).is_zero());

    Polynomial lhs = parse_polynomial(R, "(x+y)*(x+y+z)");
    Polynomial rhs = parse_polynomial(R, "x^2 + 2*x*y + y^2 + x*z + y*z");
    CHECK(lhs == rhs);

    Polynomial p = parse_polynomial(R, "x^2*y - 7*z");
    CHECK((p * Polynomial::zero(R)).is_zero());
}

TEST_CASE("ring mismatch is rejected") {
    auto R1 = qxyz();
    auto R2 = qxyzw();
    CHECK_THROWS_AS(parse_polynomial(R1, "x") + parse_polynomial(R2, "x"), mismatch_error);
}

TEST_CASE("monomial comparisons") {
    auto lex = MonomialOrder::lex();
    auto grevlex = MonomialOrder::grevlex();
    CHECK(compare(mono({1, 0}), mono({0, 1}), lex) == Cmp::GT);  // x > y
    // same degree: grevlex breaks ties on the last variable, smaller wins
    CHECK(compare(mono({2, 1, 0}), mono({1, 2, 0}), grevlex) == Cmp::GT); // x^2 y > x y^2
    CHECK(compare(mono({1, 1, 1}), mono({1, 1, 1}), grevlex) == Cmp::EQ);
    CHECK_THROWS_AS(compare(mono({1, 0}), mono({1, 0, 0}), lex), mismatch_error);
}

TEST_CASE("monomial order laws on random monomials") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int32_t> e(0, 5);
    auto rand_mono = [&] { return mono({e(rng), e(rng), e(rng)}); };
    for (MonomialOrder ord : {MonomialOrder::lex(), MonomialOrder::grlex(),
                              MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
        for (int i = 0; i < 120; ++i) {
            Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
            Cmp ab = compare(a, b, ord);
            // antisymmetry and EQ exactly on equality
            CHECK((ab == Cmp::EQ) == (a == b));
            if (ab == Cmp::GT) CHECK(compare(b, a, ord) == Cmp::LT);
            // multiplicative
            if (ab == Cmp::GT) CHECK(compare(a * c, b * c, ord) == Cmp::GT);
            // 1 is minimal
            Monomial one(3);
            if (!(a == one)) CHECK(compare(a, one, ord) == Cmp::GT);
            // transitivity spot check
            Cmp bc = compare(b, c, ord);
            if (ab == Cmp::GT && bc == Cmp::GT) CHECK(compare(a, c, ord) == Cmp::GT);
        }
    }
}

TEST_CASE("homogeneity detection") {
    auto R = qxyz();
    Polynomial sigma2 = parse_polynomial(R, "x*y + x*z + y*z");
    auto [h2, d2] = sigma2.homogeneous();
    CHECK(h2);
    CHECK(*d2 == 2);

    // Fermat f2 at n=3 has terms of degree 9 and 12
    Polynomial r = parse_polynomial(R, "y^3 - z^3");
    Polynomial s = parse_polynomial(R, "z^3 - x^3");
    Polynomial t = parse_polynomial(R, "x^3 - y^3");
    Polynomial f2 = r * s * t + parse_polynomial(R, "2") *
                                    (s * r * r * parse_polynomial(R, "x^3") +
                                     t * s * s * parse_polynomial(R, "y^3") +
                                     r * t * t * parse_polynomial(R, "z^3"));
    auto [hf, df] = f2.homogeneous();
    CHECK_FALSE(hf);
    CHECK(f2.total_degree() == 12);

    auto [hz, dz] = Polynomial::zero(R).homogeneous();
    CHECK(hz);
    CHECK_FALSE(dz.has_value()); // degree undefined for 0 by convention
}

TEST_CASE("substitution") {
    auto R = qxyzw();
    Polynomial wzw = parse_polynomial(R, "w*(z+w)");
    std::map<int, Polynomial> kill{{0, Polynomial::zero(R)}, {2, Polynomial::zero(R)}};
    CHECK(wzw.substitute(kill) == parse_polynomial(R, "w^2"));

    auto R3 = qxyz();
    Polynomial xmy = parse_polynomial(R3, "x - y");
    std::map<int, Polynomial> ytox{{1, parse_polynomial(R3, "x")}};
    CHECK(xmy.substitute(ytox).is_zero());

    CHECK_THROWS_AS(xmy.substitute({{7, parse_polynomial(R3, "x")}}), input_error);
}

TEST_CASE("partial derivatives of the arrangement polynomial") {
    auto R = qxyzw();
    Polynomial f = parse_polynomial(R, "w*(x+y)*(x+y+z+w)");
    CHECK(f.derivative(0) == f.derivative(1)); // f_x = f_y
    CHECK(f.derivative(2) == parse_polynomial(R, "x*w + y*w"));
    CHECK(f.derivative(3) ==
          parse_polynomial(R, "x^2 + 2*x*y + y^2 + x*z + y*z + 2*x*w + 2*y*w"));
    CHECK(Polynomial::constant(R, Rational(5)).derivative(0).is_zero());
}

TEST_CASE("parse-print-parse is the identity") {
    auto R = qxyz();
    for (const char* text : {"x^2*y + 2*x - 1/2", "x - y", "0", "3", "-x^3 + x*y*z - 7/3*z",
                             "x^2 - 2*x*y + y^2"}) {
        Polynomial p = parse_polynomial(R, text);
        Polynomial q = parse_polynomial(R, p.to_string());
        CHECK(p == q);
        CHECK(p.to_string() == q.to_string());
    }
    // number-field coefficients
    auto cfg = FieldConfig::number_field({Rational(1), Rational(1), Rational(1)});
    auto Rt = RingContext::make(cfg, {"x", "y", "z"}, MonomialOrder::grevlex());
    Polynomial p = parse_polynomial(Rt, "y - t*z + (1+t)*x");
    Polynomial q = parse_polynomial(Rt, p.to_string());
    CHECK(p == q);
}

TEST_CASE("parser rejects malformed input with position info") {
    auto R = qxyz();
    CHECK_THROWS_AS(parse_polynomial(R, "x*"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(R, "(x+y"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(R, "q+1"), parse_error);
    try {
        parse_polynomial(R, "x + )");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column >= 5);
    }
}

TEST_CASE("ring axioms and degree additivity on random polynomials") {
    auto R = qxyz();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int32_t> e(0, 3);
    auto rand_poly = [&] {
        std::vector<Polynomial::Term> terms;
        for (int i = 0; i < 4; ++i) {
            int c = coeff(rng);
            if (c == 0) continue;
            terms.push_back({Monomial({e(rng), e(rng), e(rng)}),
                             FieldElem::from_rational(R->field(), Rational(c))});
        }
        return Polynomial::from_terms(R, std::move(terms));
    };
    for (int i = 0; i < 150; ++i) {
        Polynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        if (!a.is_zero() && !b.is_zero())
            CHECK(*(a * b).total_degree() == *a.total_degree() + *b.total_degree());
    }
}

TEST_CASE("resorting between orders preserves the polynomial") {
    auto R = qxyz();
    auto L = qxyz(MonomialOrder::lex());
    Polynomial p = parse_polynomial(R, "x + y^2 + z^3");
    Polynomial q = p.resorted(L);
    CHECK(q.leading_monomial() == mono({1, 0, 0}));  // lex leads with x
    CHECK(p.leading_monomial() == mono({0, 0, 3}));  // grevlex leads with z^3
    CHECK(q.resorted(R) == p);
}
