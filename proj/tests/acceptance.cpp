// Acceptance suite: runs every acceptance criterion and prints one line per
// criterion. Exact arithmetic throughout, so every numeric check is exact
// equality. Exits nonzero if any criterion fails as stated.
//
// --skip-slow skips the slow-flagged criteria (6 and 10), mirroring the CLI.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>

#include "symrees/criterion.hpp"
#include "symrees/errors.hpp"
#include "symrees/families.hpp"
#include "symrees/symbolic.hpp"

using namespace symrees;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Line {
    std::string label;
    Clock::time_point start = Clock::now();

    explicit Line(std::string l) : label(std::move(l)) {}

    void done(bool ok, const std::string& detail = "") {
        double s = std::chrono::duration<double>(Clock::now() - start).count();
        std::ostringstream out;
        out << (ok ? "PASS" : "FAIL") << "  " << label;
        if (!detail.empty()) out << "  [" << detail << "]";
        out << "  (" << s << "s)";
        std::cout << out.str() << std::endl;
        if (!ok) ++g_failures;
    }
    void skipped(const std::string& why) {
        std::cout << "SKIP  " << label << "  [" << why << "]" << std::endl;
    }
};

void note(const std::string& text) { std::cout << "      " << text << std::endl; }

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---- criterion bodies -------------------------------------------------

void criterion1() {
    Line line("1  symmetric lengths lambda(S/(sigma_1..sigma_n)) = n! for n = 3,4,5");
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 5; ++n) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        auto R = RingContext::make(FieldConfig::rationals(), names, MonomialOrder::grevlex());
        std::vector<Polynomial> sig;
        for (int j = 1; j <= n; ++j) sig.push_back(elementary_symmetric(R, j));
        mpz_class lam = artinian_length(Ideal(R, sig));
        ok = ok && lam == factorial(n);
        detail += (detail.empty() ? "" : ", ") + lam.get_str();
    }
    line.done(ok, detail + " vs 6, 24, 120");
}

void criterion2() {
    Line line("2  edge-ideal criterion equal with LHS = RHS = n! for n = 3,4");
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 4; ++n) {
        FamilyInstance inst = edge_complete(n);
        CriterionReport rep = check_criterion(CriterionInput::from_family(inst));
        ok = ok && rep.equal && rep.lhs == factorial(n) && rep.rhs == factorial(n);
        detail += (detail.empty() ? "" : "; ") + rep.lhs.get_str() + "=" + rep.rhs.get_str();
    }
    line.done(ok, detail);
}

void criterion3() {
    Line line("3  fermat Hilbert numerators and multiplicities at n = 3,4");
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 4; ++n) {
        FamilyInstance inst = fermat(n, false);
        HilbertSeries hs = hilbert_series(inst.ideal);
        bool this_ok = hs.numerator == fermat_resolution_numerator(n) &&
                       hs.degree_e == n * n + 3;
        ok = ok && this_ok;
        detail += (detail.empty() ? "" : "; ") + hs.numerator.to_string() +
                  ", e=" + hs.degree_e.get_str();
    }
    line.done(ok, detail);
}

void criterion4() {
    Line line("4  fermat radicality: J_3 equals the 12-prime intersection over Q(t|t^2+t+1)");
    FamilyInstance inst = fermat(3, true);
    Ideal inter = intersect_all(inst.minimal_primes, inst.ring);
    bool ok = inst.minimal_primes.size() == 12 && ideal_equal(inst.ideal, inter);
    line.done(ok, "12 primes");
}

void criterion5() {
    Line line("5  fermat memberships f_1, f_2 in J_3^(3) via saturate-at-max");
    FamilyInstance inst = fermat(3, false);
    bool ok = true;
    for (const auto& e : inst.sop_f)
        ok = ok && symbolic_membership(e.f, SymbolicPowerRequest::at_max(inst.ideal, e.level));
    line.done(ok);
}

void criterion6(bool skip_slow) {
    Line literal("6a fermat criterion LHS as stated: local_length_at_origin((x+y+z, f1, f2)) = 108");
    if (skip_slow) {
        literal.skipped("--skip-slow");
        return;
    }
    FamilyInstance inst = fermat(3, true);
    {
        std::vector<Polynomial> param{parse_polynomial(inst.ring, "x + y + z")};
        for (const auto& e : inst.sop_f) param.push_back(e.f);
        bool ok = false;
        std::string detail;
        try {
            LocalLengthResult r = local_length_at_origin(Ideal(inst.ring, param));
            ok = r.length == 108;
            detail = "length " + r.length.get_str();
        } catch (const resource_error& e) {
            detail = e.what();
        }
        literal.done(ok, detail);
        if (!ok) {
            note("erratum: x+y+z lies in the minimal primes (y - t*z, z - t*x) and");
            note("(y - t^2*z, z - t^2*x) since 1 + t + t^2 = 0, so (x+y+z, f1, f2) vanishes");
            note("on two lines through the origin and is not a system of parameters;");
            note("the stated length diverges. See the corrected check below.");
        }
    }
    {
        Line corrected("6b fermat criterion with the validated parameter: equal with RHS = 108");
        CriterionReport rep = check_criterion(CriterionInput::from_family(inst));
        bool ok = rep.equal && rep.lhs == 108 && rep.rhs == 108 &&
                  rep.lhs_method == "local-length-at-origin";
        corrected.done(ok, "lhs " + rep.lhs.get_str() + " (" + rep.lhs_method + "), rhs " +
                               rep.rhs.get_str() + ", sop_x " + inst.sop_x[0].to_string());
    }
}

void criterion7() {
    Line line("7  jacobian example: decomposition, memberships, lengths, criterion");
    FamilyInstance inst = jacobian_arrangement();
    bool ok = true;
    Ideal inter = intersect_all(inst.minimal_primes, inst.ring);
    ok = ok && ideal_equal(inst.ideal, inter);
    Polynomial f = inst.sop_f[1].f;
    Polynomial z = Polynomial::variable(inst.ring, 2);
    ok = ok && ideal_membership(z * f, ideal_power(inst.ideal, 2));
    ok = ok && symbolic_membership(f, inst.symbolic_request(2));
    std::vector<Polynomial> param = inst.sop_x;
    param.push_back(inst.sop_f[0].f);
    param.push_back(f);
    mpz_class lam = artinian_length(Ideal(inst.ring, param));
    ok = ok && lam == 6;
    CriterionReport rep = check_criterion(CriterionInput::from_family(inst));
    ok = ok && rep.equal && rep.lhs == 6;
    line.done(ok, "lambda " + lam.get_str() + ", criterion " + rep.lhs.get_str() + "=" +
                      rep.rhs.get_str());
}

void criterion8() {
    Line line("8  symbolic-vs-ordinary: strict for the triangle with witness xyz; "
              "a^m inside a^(m) on 200 random instances");
    auto R3 = RingContext::make(FieldConfig::rationals(), {"x", "y", "z"},
                                MonomialOrder::grevlex());
    FamilyInstance edge = edge_complete(3);
    auto req = SymbolicPowerRequest::with_components(edge.ideal, 2, edge.minimal_primes);
    SymbolicVsOrdinary vo = symbolic_vs_ordinary(req);
    bool witness_is_product_of_all = vo.witness && vo.witness->term_count() == 1 &&
                                     vo.witness->leading_monomial().degree() == 3;
    bool ok = !vo.equal && witness_is_product_of_all;

    std::mt19937_64 rng(808);
    std::uniform_int_distribution<int> pick(0, 2);
    int monomial_cases = 0;
    while (monomial_cases < 150) {
        std::vector<Polynomial> gens;
        for (int k = 0; k <= pick(rng); ++k) {
            Monomial m(3);
            m.e[static_cast<size_t>(pick(rng))] = 1;
            m.e[static_cast<size_t>(pick(rng))] = 1;
            gens.push_back(Polynomial::term(R3, m, FieldElem::one(R3->field())));
        }
        Ideal I(R3, gens);
        if (I.is_zero_ideal() || I.is_unit_ideal()) continue;
        auto primes = squarefree_monomial_minimal_primes(I);
        int m = 2 + monomial_cases % 2;
        Ideal sym = symbolic_power(SymbolicPowerRequest::with_components(I, m, primes));
        Ideal ord = ideal_power(I, m);
        for (const auto& g : ord.gens()) ok = ok && ideal_membership(g, sym);
        ++monomial_cases;
    }
    // principal homogeneous binomials: symbolic equals ordinary
    std::uniform_int_distribution<int> expn(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    int binomial_cases = 0;
    while (binomial_cases < 50) {
        int a = expn(rng), b = expn(rng);
        Monomial m1(3), m2(3);
        m1.e[0] = a;
        m1.e[1] = b;
        m2.e[1] = a;
        m2.e[2] = b;
        Polynomial f =
            Polynomial::term(R3, m1, FieldElem::one(R3->field())) +
            Polynomial::term(R3, m2, FieldElem::from_rational(R3->field(),
                                                              Rational(sign(rng) ? 1 : -1)));
        Ideal I(R3, {f});
        int m = 2 + binomial_cases % 2;
        auto req2 = SymbolicPowerRequest::at_element(
            I, m, parse_polynomial(R3, "1 + x"));
        SymbolicVsOrdinary r = symbolic_vs_ordinary(req2);
        ok = ok && r.equal;
        ++binomial_cases;
    }
    line.done(ok, "witness " + (vo.witness ? vo.witness->to_string() : "none") + ", " +
                      std::to_string(monomial_cases + binomial_cases) + " instances");
}

void criterion9() {
    Line line("9  set-theoretic CI certificates for edge n=3 and the jacobian instance");
    FamilyInstance edge = edge_complete(3);
    StciReport e = stci_certificate(
        edge.ideal, {elementary_symmetric(edge.ring, 2), elementary_symmetric(edge.ring, 3)});
    FamilyInstance jac = jacobian_arrangement();
    StciReport j = stci_certificate(jac.ideal, {jac.sop_f[0].f, jac.sop_f[1].f});
    line.done(e.ok && j.ok);
}

void criterion10(bool skip_slow) {
    Line line("10 analytic spreads: l(J_3) = 3, l((x,y)) = 2, l((f)) = 1");
    if (skip_slow) {
        line.skipped("--skip-slow");
        return;
    }
    FamilyInstance inst = fermat(3, false);
    SpreadResult j3 = analytic_spread(inst.ideal);
    auto R2 = RingContext::make(FieldConfig::rationals(), {"x", "y"}, MonomialOrder::grevlex());
    SpreadResult m =
        analytic_spread(Ideal(R2, {Polynomial::variable(R2, 0), Polynomial::variable(R2, 1)}));
    SpreadResult p = analytic_spread(Ideal(R2, {parse_polynomial(R2, "x^3 - x*y^2 + y^3")}));
    bool ok = j3.spread == 3 && m.spread == 2 && p.spread == 1;
    line.done(ok, std::to_string(j3.spread) + ", " + std::to_string(m.spread) + ", " +
                      std::to_string(p.spread));
}

void criterion11() {
    Line line("11 kernel property suites, >= 1000 randomized cases");
    int cases = 0;
    bool ok = true;
    int saved_cap = default_degree_cap();
    set_default_degree_cap(14);

    auto R3 = RingContext::make(FieldConfig::rationals(), {"x", "y", "z"},
                                MonomialOrder::grevlex());
    std::mt19937_64 rng(1111);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int32_t> expo(0, 2);
    auto rand_poly = [&](int max_terms) {
        std::vector<Polynomial::Term> terms;
        for (int i = 0; i < max_terms; ++i) {
            int c = coeff(rng);
            if (c == 0) continue;
            Monomial m(3);
            for (auto& e : m.e) e = expo(rng);
            terms.push_back({std::move(m), FieldElem::from_rational(R3->field(), Rational(c))});
        }
        return Polynomial::from_terms(R3, std::move(terms));
    };
    auto nonzero = [&](int t) {
        for (;;) {
            Polynomial p = rand_poly(t);
            if (!p.is_zero()) return p;
        }
    };

    // field axioms over Q(t|t^2+t+1): 450 cases
    auto cfg = FieldConfig::number_field({Rational(1), Rational(1), Rational(1)});
    std::uniform_int_distribution<long> fc(-9, 9);
    for (int i = 0; i < 450; ++i) {
        FieldElem a = FieldElem::from_coeffs(cfg, {Rational(fc(rng), 1 + std::abs(fc(rng))),
                                                   Rational(fc(rng))});
        FieldElem b = FieldElem::from_coeffs(cfg, {Rational(fc(rng)), Rational(fc(rng))});
        FieldElem d = FieldElem::from_coeffs(cfg, {Rational(fc(rng)), Rational(fc(rng))});
        ok = ok && (a + b) == (b + a) && (a * b) == (b * a);
        ok = ok && ((a + b) + d) == (a + (b + d)) && ((a * b) * d) == (a * (b * d));
        ok = ok && (a * (b + d)) == (a * b + a * d);
        if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
        ++cases;
    }
    // GB idempotent normal forms: 220 cases
    for (int done = 0; done < 220;) {
        try {
            GroebnerBasis gb = buchberger({nonzero(4), nonzero(4)});
            if (gb.elems.empty()) continue;
            Polynomial p = rand_poly(5);
            Polynomial nf = normal_form(p, gb.elems);
            ok = ok && normal_form(nf, gb.elems) == nf;
            ok = ok && normal_form(p - nf, gb.elems).is_zero();
        } catch (const resource_error&) {
            continue;
        }
        ++done;
        ++cases;
    }
    // canonical reduced basis under shuffles: 100 cases
    std::mt19937_64 shuffler(99);
    for (int done = 0; done < 100;) {
        std::vector<Polynomial> gens{nonzero(3), nonzero(3), nonzero(3)};
        try {
            GroebnerBasis ref = buchberger(gens);
            std::shuffle(gens.begin(), gens.end(), shuffler);
            ok = ok && buchberger(gens).elems == ref.elems;
        } catch (const resource_error&) {
            continue;
        }
        ++done;
        ++cases;
    }
    // monomial fast path vs elimination: 150 cases
    for (int done = 0; done < 150;) {
        std::vector<Polynomial> ga, gb_;
        for (int k = 0; k < 2; ++k) {
            Monomial m(3), n(3);
            for (auto& e : m.e) e = expo(rng);
            for (auto& e : n.e) e = expo(rng);
            if (!m.is_one()) ga.push_back(Polynomial::term(R3, m, FieldElem::one(R3->field())));
            if (!n.is_one()) gb_.push_back(Polynomial::term(R3, n, FieldElem::one(R3->field())));
        }
        if (ga.empty() || gb_.empty()) continue;
        Ideal A(R3, ga), B(R3, gb_);
        ok = ok && ideal_equal(intersect(A, B), intersect_elimination(A, B));
        ++done;
        ++cases;
    }
    // saturation idempotence: 100 cases
    for (int done = 0; done < 100;) {
        Polynomial d = nonzero(2);
        if (d.is_constant()) continue;
        Ideal I(R3, {nonzero(3), nonzero(3)});
        try {
            if (I.is_unit_ideal()) continue;
            SaturationResult s = saturate(I, d);
            ok = ok && ideal_equal(saturate(s.ideal, d).ideal, s.ideal);
        } catch (const resource_error&) {
            continue;
        }
        ++done;
        ++cases;
    }
    set_default_degree_cap(saved_cap);
    line.done(ok && cases >= 1000, std::to_string(cases) + " cases");
}

} // namespace

int main(int argc, char** argv) {
    bool skip_slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--skip-slow") == 0) skip_slow = true;

    std::cout << "acceptance suite (exact arithmetic: all comparisons are exact)"
              << (skip_slow ? " [--skip-slow]" : "") << "\n";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6(skip_slow);
    criterion7();
    criterion8();
    criterion9();
    criterion10(skip_slow);
    criterion11();

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed as stated\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
