#include <random>

#include "doctest.h"
#include "symrees/errors.hpp"
#include "symrees/families.hpp"
#include "symrees/symbolic.hpp"

using namespace symrees;

namespace {

RingPtr ring3() {
    return RingContext::make(FieldConfig::rationals(), {"x", "y", "z"}, MonomialOrder::grevlex());
}

Ideal mk(const RingPtr& R, std::vector<std::string> texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(parse_polynomial(R, t));
    return Ideal(R, std::move(gens));
}

std::vector<Ideal> k3_primes(const RingPtr& R) {
    return {mk(R, {"y", "z"}), mk(R, {"x", "z"}), mk(R, {"x", "y"})};
}

} // namespace

TEST_CASE("the square of the triangle edge ideal misses xyz, its symbolic square has it") {
    auto R = ring3();
    Ideal edge = mk(R, {"x*y", "x*z", "y*z"});
    auto req = SymbolicPowerRequest::with_components(edge, 2, k3_primes(R));
    Ideal sym = symbolic_power(req);
    Polynomial xyz = parse_polynomial(R, "x*y*z");
    CHECK(ideal_membership(xyz, sym));
    CHECK_FALSE(ideal_membership(xyz, ideal_power(edge, 2)));

    SymbolicVsOrdinary vo = symbolic_vs_ordinary(req);
    CHECK_FALSE(vo.equal);
    REQUIRE(vo.witness.has_value());
    CHECK(*vo.witness == xyz);
}

TEST_CASE("first symbolic power returns the radical ideal itself") {
    auto R = ring3();
    Ideal edge = mk(R, {"x*y", "x*z", "y*z"});
    CHECK(ideal_equal(symbolic_power(SymbolicPowerRequest::with_components(edge, 1, k3_primes(R))),
                      edge));
    // saturation route agrees: dim S/edge = 1 and the ideal is unmixed
    CHECK(ideal_equal(symbolic_power(SymbolicPowerRequest::at_max(edge, 1)), edge));
}

TEST_CASE("saturation and component routes agree on the edge ideal") {
    auto R = ring3();
    Ideal edge = mk(R, {"x*y", "x*z", "y*z"});
    for (int m : {2, 3}) {
        Ideal via_comp =
            symbolic_power(SymbolicPowerRequest::with_components(edge, m, k3_primes(R)));
        Ideal via_sat = symbolic_power(SymbolicPowerRequest::at_max(edge, m));
        CHECK(ideal_equal(via_comp, via_sat));
    }
}

TEST_CASE("fermat symbolic cube: saturation agrees with the 12-component route") {
    FamilyInstance inst = fermat(3, true);
    Ideal via_comp = symbolic_power(
        SymbolicPowerRequest::with_components(inst.ideal, 3, inst.minimal_primes));
    Ideal via_sat = symbolic_power(SymbolicPowerRequest::at_max(inst.ideal, 3));
    CHECK(ideal_equal(via_comp, via_sat));
}

TEST_CASE("principal and maximal ideals have no symbolic defect") {
    auto R = ring3();
    Ideal principal = mk(R, {"x^2*y - z^3"});
    auto req = SymbolicPowerRequest::at_element(principal, 3, parse_polynomial(R, "x"));
    SymbolicVsOrdinary vo = symbolic_vs_ordinary(req);
    CHECK(vo.equal);

    auto R2 = RingContext::make(FieldConfig::rationals(), {"x", "y"}, MonomialOrder::grevlex());
    Ideal m = Ideal(R2, {parse_polynomial(R2, "x"), parse_polynomial(R2, "y")});
    auto mreq = SymbolicPowerRequest::with_components(m, 5, {m});
    CHECK(symbolic_vs_ordinary(mreq).equal);
}

TEST_CASE("membership short-circuit on components") {
    auto R = ring3();
    Ideal edge = mk(R, {"x*y", "x*z", "y*z"});
    auto req2 = SymbolicPowerRequest::with_components(edge, 2, k3_primes(R));
    CHECK(symbolic_membership(parse_polynomial(R, "x*y*z"), req2)); // sigma_3 in I^(2)
    CHECK_FALSE(symbolic_membership(parse_polynomial(R, "x"), req2));
    CHECK(symbolic_membership(parse_polynomial(R, "x*y + x*z + y*z"), req2) ==
          ideal_membership(parse_polynomial(R, "x*y + x*z + y*z"), symbolic_power(req2)));
}

TEST_CASE("method validity is enforced") {
    auto R = ring3();
    Ideal point = mk(R, {"x", "y", "z"}); // dim 0, saturate-at-max invalid
    CHECK_THROWS_AS(symbolic_power(SymbolicPowerRequest::at_max(point, 2)), input_error);

    Ideal edge = mk(R, {"x*y", "x*z", "y*z"});
    // components must be linear regular sequences
    CHECK_THROWS_AS(
        symbolic_power(SymbolicPowerRequest::with_components(edge, 2, {mk(R, {"x^2", "y"})})),
        input_error);
    CHECK_THROWS_AS(symbolic_power(SymbolicPowerRequest::with_components(
                        edge, 2, {mk(R, {"x", "x + y", "y"})})),
                    input_error);
    SymbolicPowerRequest bad = SymbolicPowerRequest::with_components(edge, 0, k3_primes(R));
    CHECK_THROWS_AS(symbolic_power(bad), input_error);
}

TEST_CASE("containment chain and monotonicity") {
    auto R = ring3();
    Ideal edge = mk(R, {"x*y", "x*z", "y*z"});
    Ideal s1 = symbolic_power(SymbolicPowerRequest::with_components(edge, 1, k3_primes(R)));
    Ideal s2 = symbolic_power(SymbolicPowerRequest::with_components(edge, 2, k3_primes(R)));
    Ideal s3 = symbolic_power(SymbolicPowerRequest::with_components(edge, 3, k3_primes(R)));
    // a^(m+1) inside a^(m)
    for (const auto& g : s3.gens()) CHECK(ideal_membership(g, s2));
    for (const auto& g : s2.gens()) CHECK(ideal_membership(g, s1));
    // a^(m1) * a^(m2) inside a^(m1+m2)
    Ideal prod = ideal_product(s1, s2);
    for (const auto& g : prod.gens()) CHECK(ideal_membership(g, s3));
}

TEST_CASE("ordinary powers sit inside symbolic powers on random squarefree ideals") {
    auto R = ring3();
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> pick(0, 2);
    int done = 0;
    for (int i = 0; i < 60 && done < 30; ++i) {
        // random squarefree monomial ideal on 3 variables
        std::vector<Polynomial> gens;
        for (int k = 0; k <= pick(rng); ++k) {
            Monomial m(3);
            m.e[static_cast<size_t>(pick(rng))] = 1;
            m.e[static_cast<size_t>(pick(rng))] = 1;
            gens.push_back(Polynomial::term(R, m, FieldElem::one(R->field())));
        }
        Ideal I(R, gens);
        if (I.is_zero_ideal() || I.is_unit_ideal()) continue;
        auto primes = squarefree_monomial_minimal_primes(I);
        REQUIRE(!primes.empty());
        for (int m = 2; m <= 3; ++m) {
            auto req = SymbolicPowerRequest::with_components(I, m, primes);
            Ideal sym = symbolic_power(req);
            Ideal ordinary = ideal_power(I, m);
            for (const auto& g : ordinary.gens()) CHECK(ideal_membership(g, sym));
        }
        ++done;
    }
    CHECK(done >= 25);
}

TEST_CASE("minimal primes of squarefree monomial ideals via vertex covers") {
    auto R = ring3();
    Ideal edge = mk(R, {"x*y", "x*z", "y*z"});
    auto primes = squarefree_monomial_minimal_primes(edge);
    REQUIRE(primes.size() == 3);
    // the three covers {x,y}, {x,z}, {y,z}
    for (const auto& P : primes) CHECK(P.gens().size() == 2);
    Ideal inter = intersect_all(primes, R);
    CHECK(ideal_equal(inter, edge));
    CHECK_THROWS_AS(squarefree_monomial_minimal_primes(mk(R, {"x^2"})), input_error);
}
