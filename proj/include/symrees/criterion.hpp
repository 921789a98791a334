#ifndef SYMREES_CRITERION_HPP
#define SYMREES_CRITERION_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "symrees/families.hpp"
#include "symrees/hilbert.hpp"
#include "symrees/ideal.hpp"

namespace symrees {

/// Everything the multiplicity criterion needs; family_by_name fills one of
/// these from a FamilyInstance, user jobs may assemble their own.
struct CriterionInput {
    RingPtr ring;
    Ideal ideal;
    std::vector<Ideal> primes;
    std::vector<long> localization_multiplicities;
    std::vector<Polynomial> sop_x;
    std::vector<SopEntry> sop_f;

    static CriterionInput from_family(const FamilyInstance& inst);
    SymbolicPowerRequest symbolic_request(int m) const;
};

struct PerPrimeRow {
    std::string prime;
    long e_localization;
    mpz_class length;        // lambda(S/(P + sop_x))
    mpz_class product_value; // (prod deg) * e(S/P)
    bool cm_witness;
};

struct SideChecks {
    bool sop_ok = false;
    std::string sop_detail;
    struct Membership {
        std::string poly;
        int level;
        bool ok;
    };
    std::vector<Membership> memberships;
    bool all_homogeneous = false;
};

struct CriterionReport {
    mpz_class lhs;
    std::string lhs_method; // graded-length | local-length-at-origin
    mpz_class rhs;
    mpz_class level_product;
    std::vector<PerPrimeRow> rows;
    SideChecks side_checks;
    bool equal = false;
    mpz_class difference; // lhs - rhs
};

struct CriterionOptions {
    LocalLengthOptions local;
    bool run_side_checks = true;
};

/// The multiplicity-criterion equality check: LHS the multiplicity of the full
/// parameter system (graded length when everything is homogeneous, local
/// length at the origin otherwise), RHS the level product times the sum of
/// per-prime contributions.
CriterionReport check_criterion(const CriterionInput& input, const CriterionOptions& opt = {});

struct SopReport {
    bool ok = false;
    int dim_mod_a = -1;
    bool dim_drop_ok = false;
    bool origin_isolated = false;
    std::string detail;
};

/// Checks (i) x is a sop for R/a: dim S/(a + x) = 0 with |x| = dim S/a, and
/// (ii) the origin is an isolated zero of (x, f).
SopReport verify_sop(const Ideal& a, const std::vector<Polynomial>& xs,
                     const std::vector<Polynomial>& fs);

struct ReductionResult {
    bool verified = false;
    int r = -1;
};

/// Smallest r <= r_max with J*I^r = I^(r+1); J must sit inside I.
ReductionResult check_reduction(const Ideal& J, const Ideal& I, int r_max);

struct SpreadResult {
    int spread = 0;
    bool mixed_degree_flagged = false;
};

/// Analytic spread = dim of the special fiber of the Rees algebra. Generators
/// of one common degree use the subalgebra-kernel elimination; mixed degrees
/// go through the Rees ideal (flagged).
SpreadResult analytic_spread(const Ideal& I);

struct StciDirection {
    std::string element;
    bool ok;
};

struct StciReport {
    bool ok = false;
    bool count_ok = false;
    std::vector<StciDirection> gens_in_sqrt_f; // each generator of a in sqrt(f)
    std::vector<StciDirection> f_in_sqrt_a;    // each f in sqrt(a)
};

/// Set-theoretic complete intersection certificate: sqrt(a) = sqrt(f_1..f_h)
/// with h = ht(a), via Rabinowitsch membership both ways.
StciReport stci_certificate(const Ideal& a, const std::vector<Polynomial>& fs);

} // namespace symrees

#endif
