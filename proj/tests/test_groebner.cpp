#include <algorithm>
#include <random>

#include "doctest.h"
#include "symrees/errors.hpp"
#include "symrees/groebner.hpp"

using namespace symrees;

namespace {

RingPtr ring2(MonomialOrder ord = MonomialOrder::grevlex()) {
    return RingContext::make(FieldConfig::rationals(), {"x", "y"}, ord);
}

RingPtr ring3(MonomialOrder ord = MonomialOrder::grevlex()) {
    return RingContext::make(FieldConfig::rationals(), {"x", "y", "z"}, ord);
}

std::vector<Polynomial> parse_all(const RingPtr& R, std::vector<std::string> texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(R, t));
    return out;
}

} // namespace

TEST_CASE("normal form examples") {
    auto R = ring2(MonomialOrder::lex());
    // manual division oracle: x^2 y - x*(x y - 1) = x
    Polynomial p = parse_polynomial(R, "x^2*y");
    auto G = parse_all(R, {"x*y - 1"});
    CHECK(normal_form(p, G) == parse_polynomial(R, "x"));

    Polynomial g = parse_polynomial(R, "x^3 - 2*x*y + 1");
    std::vector<Polynomial> self{g};
    CHECK(normal_form(g, self).is_zero());

    auto vars = parse_all(R, {"x", "y"});
    CHECK(normal_form(parse_polynomial(R, "1"), vars) == parse_polynomial(R, "1"));
}

TEST_CASE("buchberger on linear and monomial inputs") {
    auto L = ring2(MonomialOrder::lex());
    GroebnerBasis gb = buchberger(parse_all(L, {"x + y", "x - y"}));
    REQUIRE(gb.elems.size() == 2);
    CHECK(gb.elems[0] == parse_polynomial(L, "y"));
    CHECK(gb.elems[1] == parse_polynomial(L, "x"));

    auto R = ring3();
    GroebnerBasis edge = buchberger(parse_all(R, {"x*y", "x*z", "y*z"}));
    REQUIRE(edge.elems.size() == 3);
    // ascending under grevlex: yz < xz < xy
    CHECK(edge.elems[0] == parse_polynomial(R, "y*z"));
    CHECK(edge.elems[1] == parse_polynomial(R, "x*z"));
    CHECK(edge.elems[2] == parse_polynomial(R, "x*y"));
}

TEST_CASE("the simplified arrangement generators match the raw partials") {
    auto R = RingContext::make(FieldConfig::rationals(), {"x", "y", "z", "w"},
                               MonomialOrder::grevlex());
    Polynomial f = parse_polynomial(R, "w*(x+y)*(x+y+z+w)");
    GroebnerBasis a = buchberger({f.derivative(0), f.derivative(2), f.derivative(3)});
    GroebnerBasis b = buchberger(parse_all(R, {"w*(z+w)", "(x+y)*(x+y+z)", "w*(x+y)"}));
    CHECK(a.elems == b.elems);
}

TEST_CASE("normal form is idempotent and division is exact") {
    auto R = ring3();
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> coeff(-3, 3);
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
    for (int i = 0; i < 60; ++i) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            Polynomial p = rand_poly();
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(gens);
        if (gb.elems.empty()) continue;
        Polynomial p = rand_poly();
        Polynomial nf = normal_form(p, gb.elems);
        CHECK(normal_form(nf, gb.elems) == nf);
        // p - NF(p) lies in the ideal: it must divide to zero again
        CHECK(normal_form(p - nf, gb.elems).is_zero());
    }
}

TEST_CASE("reduced basis is canonical regardless of generator order") {
    auto R = ring3();
    auto gens = parse_all(R, {"x^2 + y*z", "x*y - z^2", "y^3 - x*z", "x*z^2 - y^2*z"});
    GroebnerBasis ref = buchberger(gens);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 8; ++i) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        GroebnerBasis gb = buchberger(shuffled);
        CHECK(gb.elems == ref.elems);
    }
}

TEST_CASE("reduced basis properties hold") {
    auto R = ring3();
    auto gens = parse_all(R, {"x^2 - y", "x*y - z", "x*z - y^2"});
    GroebnerBasis gb = buchberger(gens);
    for (size_t i = 0; i < gb.elems.size(); ++i) {
        CHECK(gb.elems[i].leading_coeff().is_one());
        for (size_t j = 0; j < gb.elems.size(); ++j) {
            if (i == j) continue;
            // no lead divides another lead; no lead divides any trailing term
            CHECK_FALSE(gb.elems[j].leading_monomial().divides(gb.elems[i].leading_monomial()));
            for (size_t k = 1; k < gb.elems[i].terms().size(); ++k)
                CHECK_FALSE(
                    gb.elems[j].leading_monomial().divides(gb.elems[i].terms()[k].m));
        }
    }
    // every S-polynomial reduces to zero
    for (size_t i = 0; i < gb.elems.size(); ++i)
        for (size_t j = i + 1; j < gb.elems.size(); ++j) {
            Monomial l = Monomial::lcm(gb.elems[i].leading_monomial(),
                                       gb.elems[j].leading_monomial());
            Polynomial s = Polynomial::zero(R)
                               .fma_term(FieldElem::one(R->field()),
                                         l / gb.elems[i].leading_monomial(), gb.elems[i])
                               .fma_term(-FieldElem::one(R->field()),
                                         l / gb.elems[j].leading_monomial(), gb.elems[j]);
            CHECK(normal_form(s, gb.elems).is_zero());
        }
}

TEST_CASE("monomial ideals reduce to their minimal generating set") {
    auto R = ring3();
    GroebnerBasis gb = buchberger(parse_all(R, {"x^2*y", "x^2*y*z", "y*z", "x^4*y^2", "z^3"}));
    REQUIRE(gb.elems.size() == 3);
    CHECK(gb.elems[0] == parse_polynomial(R, "y*z"));
    CHECK(gb.elems[1] == parse_polynomial(R, "z^3"));
    CHECK(gb.elems[2] == parse_polynomial(R, "x^2*y"));
}

TEST_CASE("degree cap raises a resource error") {
    auto R = ring2();
    GroebnerOptions opt;
    opt.degree_cap = 4;
    CHECK_THROWS_AS(buchberger(parse_all(R, {"x^3 - y", "x*y^3 - x - 1"}), opt), resource_error);
}

TEST_CASE("lex basis eliminates like resultants") {
    // classic: intersection of a circle and a parabola
    auto L = ring2(MonomialOrder::lex());
    GroebnerBasis gb = buchberger(parse_all(L, {"x^2 + y^2 - 1", "y - x^2"}));
    // the last element is univariate in y
    bool found_univariate = false;
    for (const auto& g : gb.elems) {
        bool only_y = true;
        for (const auto& t : g.terms())
            if (t.m.e[0] != 0) only_y = false;
        if (only_y && !g.is_zero()) found_univariate = true;
    }
    CHECK(found_univariate);
}
