#include "symrees/symbolic.hpp"

#include <algorithm>

#include "symrees/errors.hpp"

namespace symrees {

std::string to_string(SymbolicMethod m) {
    switch (m) {
        case SymbolicMethod::saturate_at_max: return "saturate-at-max";
        case SymbolicMethod::saturate_at_element: return "saturate-at-element";
        case SymbolicMethod::component_intersection: return "component-intersection";
    }
    return "?";
}

SymbolicPowerRequest SymbolicPowerRequest::at_max(Ideal base, int m) {
    SymbolicPowerRequest r;
    r.base = std::move(base);
    r.exponent = m;
    r.method = SymbolicMethod::saturate_at_max;
    r.asserted.dim_one = true;
    r.asserted.unmixed = true;
    return r;
}

SymbolicPowerRequest SymbolicPowerRequest::at_element(Ideal base, int m, Polynomial g) {
    SymbolicPowerRequest r;
    r.base = std::move(base);
    r.exponent = m;
    r.method = SymbolicMethod::saturate_at_element;
    r.element = std::move(g);
    return r;
}

SymbolicPowerRequest SymbolicPowerRequest::with_components(Ideal base, int m,
                                                           std::vector<Ideal> comps) {
    SymbolicPowerRequest r;
    r.base = std::move(base);
    r.exponent = m;
    r.method = SymbolicMethod::component_intersection;
    r.components = std::move(comps);
    r.asserted.radical_with_known_components = true;
    return r;
}

namespace {

// Rank of the coefficient matrix of linear forms, exact Gaussian elimination.
int linear_forms_rank(const std::vector<Polynomial>& forms, const RingPtr& ring) {
    size_t n = static_cast<size_t>(ring->nvars());
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& f : forms) {
        std::vector<FieldElem> row(n, FieldElem::zero(ring->field()));
        for (const auto& t : f.terms())
            for (size_t i = 0; i < n; ++i)
                if (t.m.e[i] == 1) row[i] = t.c;
        rows.push_back(std::move(row));
    }
    int rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < n; ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        FieldElem inv = rows[r][col].inverse();
        for (size_t rr = r + 1; rr < rows.size(); ++rr) {
            if (rows[rr][col].is_zero()) continue;
            FieldElem factor = rows[rr][col] * inv;
            for (size_t cc = col; cc < n; ++cc)
                rows[rr][cc] = rows[rr][cc] - factor * rows[r][cc];
        }
        ++r;
        ++rank;
    }
    return rank;
}

void validate_request(const SymbolicPowerRequest& req) {
    if (req.exponent < 1) throw input_error("symbolic power exponent must be >= 1");
    switch (req.method) {
        case SymbolicMethod::saturate_at_max: {
            int d = dimension(req.base);
            if (d != 1)
                throw input_error("saturate-at-max requires dim S/a = 1, got " +
                                  std::to_string(d));
            if (!req.asserted.unmixed)
                throw input_error("saturate-at-max requires the caller to assert unmixedness");
            break;
        }
        case SymbolicMethod::saturate_at_element:
            if (!req.element || req.element->is_zero())
                throw input_error("saturate-at-element needs a nonzero element");
            check_same_ring(req.base.ring(), req.element->ring());
            break;
        case SymbolicMethod::component_intersection: {
            if (req.components.empty())
                throw input_error("component-intersection needs a nonempty prime list");
            for (const auto& P : req.components) {
                check_same_ring(req.base.ring(), P.ring());
                for (const auto& g : P.gens())
                    if (!g.is_linear_form())
                        throw input_error(
                            "component-intersection requires components generated by linear "
                            "forms");
                int rank = linear_forms_rank(P.gens(), P.ring());
                if (rank != static_cast<int>(P.gens().size()))
                    throw input_error(
                        "component generators are not a regular sequence of linear forms "
                        "(dependent)");
            }
            break;
        }
    }
}

} // namespace

Ideal symbolic_power(const SymbolicPowerRequest& req) {
    validate_request(req);
    switch (req.method) {
        case SymbolicMethod::saturate_at_max: {
            Ideal power = ideal_power(req.base, req.exponent);
            return saturate_ideal(power, maximal_ideal(req.base.ring()));
        }
        case SymbolicMethod::saturate_at_element: {
            Ideal power = ideal_power(req.base, req.exponent);
            return saturate(power, *req.element).ideal;
        }
        case SymbolicMethod::component_intersection: {
            std::vector<Ideal> powers;
            powers.reserve(req.components.size());
            for (const auto& P : req.components) powers.push_back(ideal_power(P, req.exponent));
            Ideal result = intersect_all(powers, req.base.ring());
            // canonicalize through the reduced basis
            return Ideal(req.base.ring(), canonical_generators(result));
        }
    }
    throw input_error("unreachable symbolic method");
}

bool symbolic_membership(const Polynomial& f, const SymbolicPowerRequest& req) {
    validate_request(req);
    if (req.method == SymbolicMethod::component_intersection) {
        for (const auto& P : req.components)
            if (!ideal_membership(f, ideal_power(P, req.exponent))) return false;
        return true;
    }
    return ideal_membership(f, symbolic_power(req));
}

SymbolicVsOrdinary symbolic_vs_ordinary(const SymbolicPowerRequest& req) {
    Ideal sym = symbolic_power(req);
    Ideal ord = ideal_power(req.base, req.exponent);
    if (ideal_equal(sym, ord)) return {true, std::nullopt};
    // witness: scan basis elements of a^(m), lowest first, for one outside a^m
    const auto& elems = sym.canonical_groebner().elems;
    for (const auto& g : elems)
        if (!ideal_membership(g.resorted(req.base.ring()), ord))
            return {false, g.resorted(req.base.ring())};
    throw error("internal: ideals differ but no witness generator found");
}

std::vector<Ideal> squarefree_monomial_minimal_primes(const Ideal& I) {
    if (!I.monomial()) throw input_error("minimal primes auto-derivation needs a monomial ideal");
    const RingPtr& ring = I.ring();
    int n = ring->nvars();
    if (n > 20) throw resource_error("too many variables for brute-force vertex covers");
    std::vector<Monomial> gens;
    for (const auto& g : I.gens()) {
        for (int32_t e : g.leading_monomial().e)
            if (e > 1)
                throw input_error("minimal primes auto-derivation needs a squarefree ideal");
        gens.push_back(g.leading_monomial());
    }
    std::vector<uint32_t> covers;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool covers_all = true;
        for (const auto& g : gens) {
            bool hit = false;
            for (int i = 0; i < n && !hit; ++i)
                if (g.e[static_cast<size_t>(i)] > 0 && (mask & (1u << i))) hit = true;
            if (!hit) { covers_all = false; break; }
        }
        if (covers_all) covers.push_back(mask);
    }
    std::vector<uint32_t> minimal;
    for (uint32_t c : covers) {
        bool is_min = true;
        for (uint32_t o : covers)
            if (o != c && (o & c) == o) { is_min = false; break; }
        if (is_min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    std::vector<Ideal> primes;
    for (uint32_t mask : minimal) {
        std::vector<Polynomial> vars;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) vars.push_back(Polynomial::variable(ring, i));
        primes.emplace_back(ring, std::move(vars));
    }
    return primes;
}

} // namespace symrees
