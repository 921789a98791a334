#ifndef SYMREES_GROEBNER_HPP
#define SYMREES_GROEBNER_HPP

#include <span>
#include <vector>

#include "symrees/polyring.hpp"

namespace symrees {

/// Process-wide default for the S-polynomial degree cap (one job per process;
/// the CLI sets this once from --gb-degree-cap).
int default_degree_cap();
void set_default_degree_cap(int cap);

struct GroebnerOptions {
    /// Hard cap on the total degree of any S-polynomial lcm processed;
    /// exceeding it raises resource_error.
    int degree_cap = default_degree_cap();
    /// When >= 0, all arithmetic is done modulo m^truncation_degree: terms of
    /// total degree >= this bound are dropped during reduction. Requires a
    /// degree-compatible order. Callers must seed the generators with the
    /// monomials of that degree themselves.
    int truncation_degree = -1;
};

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by leading
/// monomial. Canonical for a given ideal and order.
struct GroebnerBasis {
    RingPtr ring; // carries the order the basis was computed under
    std::vector<Polynomial> elems;

    bool contains_unit() const {
        return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
    }
    bool is_zero_ideal() const { return elems.empty(); }
};

/// Remainder of multivariate division of p by G (full tail reduction): no term
/// of the result is divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G,
                       int truncation_degree = -1);

/// Buchberger's algorithm with the normal pair-selection strategy and both
/// Buchberger criteria; output is the canonical reduced basis.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const GroebnerOptions& opt = {});

} // namespace symrees

#endif
