#ifndef SYMREES_SYMBOLIC_HPP
#define SYMREES_SYMBOLIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "symrees/hilbert.hpp"
#include "symrees/ideal.hpp"

namespace symrees {

enum class SymbolicMethod { saturate_at_max, saturate_at_element, component_intersection };

std::string to_string(SymbolicMethod m);

/// One symbolic-power computation. Exactly one method; the validity flags
/// record which hypotheses the caller asserts (they are echoed in reports, not
/// re-derived; the families module supplies correct assertions).
///
/// Symbolic powers here follow the minimal-prime reading, which matches the
/// associated-prime definition exactly when the base ideal is radical; all
/// supported inputs are radical. For non-radical bases the two definitions
/// diverge and this module makes no promise.
struct SymbolicPowerRequest {
    Ideal base;
    int exponent = 1;
    SymbolicMethod method = SymbolicMethod::saturate_at_max;
    std::optional<Polynomial> element;  // saturate_at_element
    std::vector<Ideal> components;      // component_intersection

    struct Assertions {
        bool unmixed = false;
        bool dim_one = false;
        bool radical_with_known_components = false;
    } asserted;

    static SymbolicPowerRequest at_max(Ideal base, int m);
    static SymbolicPowerRequest at_element(Ideal base, int m, Polynomial g);
    static SymbolicPowerRequest with_components(Ideal base, int m, std::vector<Ideal> comps);
};

/// a^(m) under the paper's definition, by the requested route.
/// saturate_at_max requires dim S/a = 1 (checked) and unmixedness (asserted):
/// the only possible embedded prime of a^m is then the irrelevant maximal
/// ideal, so a^(m) = a^m : m^infty. component_intersection requires each
/// component to be generated by ht-many independent linear forms (checked).
Ideal symbolic_power(const SymbolicPowerRequest& req);

/// Membership f in a^(m). The component route short-circuits: f in P_i^m for
/// every i, no full intersection computed.
bool symbolic_membership(const Polynomial& f, const SymbolicPowerRequest& req);

struct SymbolicVsOrdinary {
    bool equal;
    std::optional<Polynomial> witness; // lowest-order basis element of a^(m) \ a^m
};

SymbolicVsOrdinary symbolic_vs_ordinary(const SymbolicPowerRequest& req);

/// Minimal primes of a squarefree monomial ideal via minimal vertex covers
/// (brute force over variable subsets). Used by the CLI's `--components auto`
/// and as a test oracle.
std::vector<Ideal> squarefree_monomial_minimal_primes(const Ideal& I);

} // namespace symrees

#endif
