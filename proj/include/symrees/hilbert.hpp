#ifndef SYMREES_HILBERT_HPP
#define SYMREES_HILBERT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "symrees/ideal.hpp"

namespace symrees {

/// Univariate polynomial with integer coefficients, coefficient of u^i at
/// index i. Used for Hilbert numerators.
struct IntPoly {
    std::vector<mpz_class> c;

    static IntPoly zero() { return {}; }
    static IntPoly one() { return IntPoly{{mpz_class(1)}}; }
    static IntPoly monomial(int deg, const mpz_class& coeff);

    bool is_zero() const;
    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }
    mpz_class at(size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }
    mpz_class eval_one() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    /// Multiply by u^k.
    IntPoly shifted(int k) const;
    /// Exact division by (1-u); throws if not divisible.
    IntPoly divided_by_one_minus_u() const;

    bool operator==(const IntPoly& o) const { return c == o.c; }
    std::string to_string(const std::string& var = "u") const;
};

/// Hilbert series of S/I as h(u)/(1-u)^n together with the reduced form
/// h = (1-u)^c * hred, hred(1) != 0; dim = n - c and degree e = hred(1).
struct HilbertSeries {
    IntPoly numerator;
    int ambient_vars = 0;
    IntPoly reduced;
    int dim = 0;
    mpz_class degree_e;

    static HilbertSeries from_numerator(IntPoly h, int nvars);
    std::string to_string() const;
};

/// Exact numerator for a monomial ideal by the pivot-variable recursion
/// (split on a variable occurring in a non-pure-power generator; pure-power
/// base case by inclusion-exclusion), memoized on the minimal generator set.
HilbertSeries hilbert_series_monomial(const Ideal& I);

/// Hilbert series of S/I for I with homogeneous generators, through the
/// initial ideal under a degree-compatible order.
HilbertSeries hilbert_series(const Ideal& I);

/// Degree e(S/I) = hred(1) for proper homogeneous I.
mpz_class multiplicity(const Ideal& I);

/// Length of S/I for dim S/I = 0: the number of standard monomials.
mpz_class artinian_length(const Ideal& I, const GroebnerOptions& opt = {});

/// Test oracle: counts standard monomials by direct enumeration.
mpz_class artinian_length_bruteforce(const Ideal& I);

struct LocalLengthOptions {
    int n_cap = 128;
    int initial_N = -1; // default: 2*(max generator degree)+2
    int degree_cap = 60;
};

struct LocalLengthResult {
    mpz_class length;
    int stabilized_N; // first N whose truncated length equals the next probe's
};

/// Length of (S/I) localized at the origin, computed as dim_k S/(I + m^N) for
/// N doubling until two consecutive values agree. Detects a positive
/// dimensional component through the origin early (via saturation) and raises
/// resource_error, since the truncated lengths would grow without bound.
LocalLengthResult local_length_at_origin(const Ideal& I, const LocalLengthOptions& opt = {});

/// Independent route for tests: extracts the m-primary component by saturating
/// at an element of (I : m^infty) that is nonzero at the origin.
mpz_class local_length_via_component(const Ideal& I);

/// True iff the origin is an isolated point of V(I) (or not on V(I) at all):
/// no positive-dimensional component through the origin survives saturation.
bool origin_is_isolated_zero(const Ideal& I);

struct GradedSopResult {
    mpz_class length;        // lambda(S/(P + forms))
    mpz_class product_value; // (prod deg f_i) * e(S/P)
    bool cm_witness;         // length == product: multiplicity certified as length
};

/// lambda and the product-formula value for homogeneous forms whose images are
/// a system of parameters in S/P; not-a-sop inputs raise input_error.
GradedSopResult multiplicity_of_graded_sop(const std::vector<Polynomial>& forms, const Ideal& P);

} // namespace symrees

#endif
