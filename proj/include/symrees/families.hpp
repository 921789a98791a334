#ifndef SYMREES_FAMILIES_HPP
#define SYMREES_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "symrees/hilbert.hpp"
#include "symrees/ideal.hpp"
#include "symrees/symbolic.hpp"

namespace symrees {

struct SopEntry {
    Polynomial f;
    int level;                // f asserted (and usually checked) to lie in a^(level)
    bool membership_checked;  // whether construction verified the membership
};

struct FamilyCheck {
    std::string name;
    bool ran = false;
    bool passed = false;
    std::string detail;
};

/// One of the paper's three ideal families with all its side data: minimal
/// primes, the two systems of parameters, localization multiplicities.
struct FamilyInstance {
    std::string name; // edge-complete | fermat | jacobian-arrangement
    std::optional<int> n;
    RingPtr ring;
    Ideal ideal;
    std::vector<Ideal> minimal_primes;
    std::vector<Polynomial> sop_x;
    std::vector<SopEntry> sop_f;
    std::vector<long> localization_multiplicities; // all 1
    std::string localization_justification;

    bool sop_x_replaced = false;
    std::string sop_x_note;

    std::vector<FamilyCheck> checks;

    /// Request for symbolic-power work on this ideal: component intersection
    /// when the primes are available, else saturation at the maximal ideal.
    SymbolicPowerRequest symbolic_request(int m) const;

    bool all_checks_passed() const {
        for (const auto& c : checks)
            if (c.ran && !c.passed) return false;
        return true;
    }
};

struct FamilyOptions {
    /// Run the expensive construction checks (Fermat radicality via the full
    /// prime intersection, symbolic memberships of the sop-f entries). The
    /// cheap structural checks always run.
    bool expensive_checks = false;
    uint64_t seed = 0;
};

/// Edge ideal of the complete graph K_n in Q[x1..xn]; primes p_i = (all
/// variables except x_i); sop-x = sigma_1; sop-f = (sigma_j, j-1), j = 2..n.
FamilyInstance edge_complete(int n, const FamilyOptions& opt = {});

/// sigma_j(x_1..x_n): the sum of all squarefree degree-j monomials.
Polynomial elementary_symmetric(const RingPtr& ring, int j);

/// Fermat ideal J_n = (x(y^n-z^n), y(z^n-x^n), z(x^n-y^n)) over Q, or over
/// Q(t|Phi_n) with the n^2+3 minimal primes when with_cyclotomic is set
/// (available for n <= 12 from the cyclotomic table).
FamilyInstance fermat(int n, bool with_cyclotomic, const FamilyOptions& opt = {});

/// Jacobian ideal of w(x+y)(x+y+z+w) in Q[x,y,z,w] with its three primes.
FamilyInstance jacobian_arrangement(const FamilyOptions& opt = {});

/// Closed-form Hilbert numerator 1 - 3u^(n+1) + u^(n+3) + u^(2n) of S/J_n,
/// read off the minimal free resolution; cross-checks hilbert_series.
IntPoly fermat_resolution_numerator(int n);

/// Coefficients (ascending) of the cyclotomic polynomial Phi_k, k = 1..12.
const std::vector<Rational>& cyclotomic_polynomial(int k);

FamilyInstance family_by_name(const std::string& name, std::optional<int> n,
                              const FamilyOptions& opt = {});

} // namespace symrees

#endif
