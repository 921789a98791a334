#include "symrees/criterion.hpp"

#include <algorithm>

#include "symrees/errors.hpp"
#include "symrees/symbolic.hpp"

namespace symrees {

CriterionInput CriterionInput::from_family(const FamilyInstance& inst) {
    CriterionInput in;
    in.ring = inst.ring;
    in.ideal = inst.ideal;
    in.primes = inst.minimal_primes;
    in.localization_multiplicities = inst.localization_multiplicities;
    in.sop_x = inst.sop_x;
    in.sop_f = inst.sop_f;
    return in;
}

SymbolicPowerRequest CriterionInput::symbolic_request(int m) const {
    if (!primes.empty()) return SymbolicPowerRequest::with_components(ideal, m, primes);
    return SymbolicPowerRequest::at_max(ideal, m);
}

SopReport verify_sop(const Ideal& a, const std::vector<Polynomial>& xs,
                     const std::vector<Polynomial>& fs) {
    SopReport rep;
    if (static_cast<int>(xs.size() + fs.size()) != a.ring()->nvars()) {
        rep.detail = "|x| + |f| must equal the variable count";
        return rep;
    }
    rep.dim_mod_a = dimension(a);
    if (rep.dim_mod_a != static_cast<int>(xs.size())) {
        rep.detail = "|x| = " + std::to_string(xs.size()) + " but dim S/a = " +
                     std::to_string(rep.dim_mod_a);
        return rep;
    }
    {
        std::vector<Polynomial> gens = a.gens();
        gens.insert(gens.end(), xs.begin(), xs.end());
        Ideal probe(a.ring(), gens);
        rep.dim_drop_ok = probe.is_unit_ideal() ? false : dimension(probe) == 0;
        if (!rep.dim_drop_ok) {
            rep.detail = "dim S/(a + x) != 0";
            return rep;
        }
    }
    {
        std::vector<Polynomial> gens = xs;
        gens.insert(gens.end(), fs.begin(), fs.end());
        rep.origin_isolated = origin_is_isolated_zero(Ideal(a.ring(), gens));
        if (!rep.origin_isolated) {
            rep.detail = "(x, f) vanishes on a positive-dimensional set through the origin";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

CriterionReport check_criterion(const CriterionInput& input, const CriterionOptions& opt) {
    if (input.primes.empty())
        throw input_error("criterion check needs the minimal primes of the ideal");
    if (input.primes.size() != input.localization_multiplicities.size())
        throw input_error("one localization multiplicity per prime required");
    if (input.sop_f.empty()) throw input_error("criterion check needs the sop-f elements");

    CriterionReport rep;

    bool homogeneous = true;
    for (const auto& x : input.sop_x)
        if (!x.homogeneous().first || x.is_zero()) homogeneous = false;
    for (const auto& e : input.sop_f)
        if (!e.f.homogeneous().first || e.f.is_zero()) homogeneous = false;
    rep.side_checks.all_homogeneous = homogeneous;

    if (opt.run_side_checks) {
        std::vector<Polynomial> fs;
        for (const auto& e : input.sop_f) fs.push_back(e.f);
        SopReport sop = verify_sop(input.ideal, input.sop_x, fs);
        rep.side_checks.sop_ok = sop.ok;
        rep.side_checks.sop_detail = sop.detail;
        if (!sop.ok)
            throw input_error("criterion sop verification failed: " + sop.detail);
        for (const auto& e : input.sop_f) {
            bool member = symbolic_membership(e.f, input.symbolic_request(e.level));
            rep.side_checks.memberships.push_back(
                SideChecks::Membership{e.f.to_string(), e.level, member});
            if (!member)
                throw input_error("criterion membership failed: level " +
                                  std::to_string(e.level));
        }
    }

    // LHS: multiplicity of the full parameter ideal (x, f)
    std::vector<Polynomial> param = input.sop_x;
    for (const auto& e : input.sop_f) param.push_back(e.f);
    Ideal param_ideal(input.ring, param);
    if (homogeneous) {
        rep.lhs = artinian_length(param_ideal);
        rep.lhs_method = "graded-length";
    } else {
        rep.lhs = local_length_at_origin(param_ideal, opt.local).length;
        rep.lhs_method = "local-length-at-origin";
    }

    // RHS: (prod k_j) * sum_i e_i * e_x(R/P_i)
    rep.level_product = 1;
    for (const auto& e : input.sop_f) rep.level_product *= e.level;
    mpz_class sum = 0;
    for (size_t i = 0; i < input.primes.size(); ++i) {
        GradedSopResult row = multiplicity_of_graded_sop(input.sop_x, input.primes[i]);
        mpz_class e_x = row.cm_witness ? row.length : row.product_value;
        sum += e_x * input.localization_multiplicities[i];
        rep.rows.push_back(PerPrimeRow{input.primes[i].to_string(),
                                       input.localization_multiplicities[i], row.length,
                                       row.product_value, row.cm_witness});
    }
    rep.rhs = rep.level_product * sum;
    rep.difference = rep.lhs - rep.rhs;
    rep.equal = rep.difference == 0;
    return rep;
}

ReductionResult check_reduction(const Ideal& J, const Ideal& I, int r_max) {
    check_same_ring(J.ring(), I.ring());
    for (const auto& g : J.gens())
        if (!ideal_membership(g, I))
            throw input_error("check_reduction: J is not contained in I");
    for (int r = 0; r <= r_max; ++r) {
        Ideal lhs = ideal_product(J, ideal_power(I, r));
        Ideal rhs = ideal_power(I, r + 1);
        if (ideal_equal(lhs, rhs)) return {true, r};
    }
    return {false, -1};
}

SpreadResult analytic_spread(const Ideal& I) {
    const RingPtr& ring = I.ring();
    if (I.is_zero_ideal()) return {0, false};
    size_t m = I.gens().size();
    int n = ring->nvars();

    bool equal_degree = true;
    std::optional<int> common;
    for (const auto& g : I.gens()) {
        auto [h, d] = g.homogeneous();
        if (!h || !d) { equal_degree = false; break; }
        if (!common) common = d;
        else if (*common != *d) { equal_degree = false; break; }
    }

    std::vector<std::string> fiber_vars;
    for (size_t i = 0; i < m; ++i) fiber_vars.push_back("@Y" + std::to_string(i + 1));

    std::vector<Polynomial> fiber_gens;
    if (equal_degree) {
        // fiber cone = k[g_1..g_m]; its presentation is the kernel of Y_i -> g_i
        std::vector<std::string> vars = ring->vars();
        vars.insert(vars.end(), fiber_vars.begin(), fiber_vars.end());
        RingPtr ext = RingContext::make(ring->field(), vars, MonomialOrder::block(n));
        std::vector<int> up(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] = i;
        std::vector<Polynomial> gens;
        for (size_t i = 0; i < m; ++i)
            gens.push_back(Polynomial::variable(ext, n + static_cast<int>(i)) -
                           I.gens()[i].mapped(ext, up));
        GroebnerBasis gb = buchberger(std::move(gens));
        RingPtr fiber = RingContext::make(ring->field(), fiber_vars, MonomialOrder::grevlex());
        std::vector<int> down(static_cast<size_t>(ext->nvars()), -1);
        for (size_t i = 0; i < m; ++i)
            down[static_cast<size_t>(n) + i] = static_cast<int>(i);
        for (const auto& h : gb.elems) {
            bool involves_x = false;
            for (const auto& t : h.terms())
                for (int v = 0; v < n && !involves_x; ++v)
                    if (t.m.e[static_cast<size_t>(v)] != 0) involves_x = true;
            if (!involves_x) fiber_gens.push_back(h.mapped(fiber, down));
        }
        Ideal Q(fiber, std::move(fiber_gens));
        return {Q.is_zero_ideal() ? static_cast<int>(m) : dimension(Q), false};
    }

    // mixed degrees: present the Rees algebra with a homogenizing variable T,
    // then kill the original variables (special fiber = Rees algebra mod m)
    std::vector<std::string> vars;
    vars.push_back("@T");
    for (const auto& v : ring->vars()) vars.push_back(v);
    vars.insert(vars.end(), fiber_vars.begin(), fiber_vars.end());
    RingPtr ext = RingContext::make(ring->field(), vars, MonomialOrder::block(1));
    std::vector<int> up(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] = i + 1;
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < m; ++i)
        gens.push_back(Polynomial::variable(ext, n + 1 + static_cast<int>(i)) -
                       Polynomial::variable(ext, 0) * I.gens()[i].mapped(ext, up));
    GroebnerBasis gb = buchberger(std::move(gens));
    RingPtr fiber = RingContext::make(ring->field(), fiber_vars, MonomialOrder::grevlex());
    // keep T-free elements (the Rees ideal), then set the x variables to zero
    std::vector<int> down(static_cast<size_t>(ext->nvars()), -1);
    for (size_t i = 0; i < m; ++i)
        down[static_cast<size_t>(n) + 1 + i] = static_cast<int>(i);
    for (const auto& h : gb.elems) {
        bool has_T = false;
        for (const auto& t : h.terms())
            if (t.m.e[0] != 0) { has_T = true; break; }
        if (has_T) continue;
        // drop terms involving any original variable (image under x -> 0)
        std::vector<Polynomial::Term> kept;
        for (const auto& t : h.terms()) {
            bool involves_x = false;
            for (int v = 1; v <= n && !involves_x; ++v)
                if (t.m.e[static_cast<size_t>(v)] != 0) involves_x = true;
            if (!involves_x) kept.push_back(t);
        }
        if (kept.empty()) continue;
        Polynomial image = Polynomial::from_terms(ext, std::move(kept)).mapped(fiber, down);
        if (!image.is_zero()) fiber_gens.push_back(std::move(image));
    }
    Ideal Q(fiber, std::move(fiber_gens));
    return {Q.is_zero_ideal() ? static_cast<int>(m) : dimension(Q), true};
}

StciReport stci_certificate(const Ideal& a, const std::vector<Polynomial>& fs) {
    StciReport rep;
    rep.count_ok = static_cast<int>(fs.size()) == height(a);
    if (!rep.count_ok) return rep;
    Ideal J(a.ring(), fs);
    bool all = true;
    for (const auto& g : a.gens()) {
        bool ok = radical_membership(g, J);
        rep.gens_in_sqrt_f.push_back(StciDirection{g.to_string(), ok});
        all = all && ok;
    }
    for (const auto& f : fs) {
        bool ok = radical_membership(f, a);
        rep.f_in_sqrt_a.push_back(StciDirection{f.to_string(), ok});
        all = all && ok;
    }
    rep.ok = all;
    return rep;
}

} // namespace symrees
