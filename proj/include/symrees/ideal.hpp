#ifndef SYMREES_IDEAL_HPP
#define SYMREES_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symrees/groebner.hpp"
#include "symrees/polyring.hpp"

namespace symrees {

/// Finitely generated ideal in a fixed ring. Immutable; reduced Groebner bases
/// are cached per order behind shared interior-mutable storage, so copies of
/// an ideal share the cache.
class Ideal {
public:
    Ideal() = default;
    /// Zero generators are filtered out; an empty list is the zero ideal.
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
    static Ideal unit(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    /// True iff every generator is a single term.
    bool monomial() const { return monomial_flag_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool homogeneous_generators() const;

    /// Reduced Groebner basis under the given order (default: the ring's own
    /// order), computed on demand and cached.
    const GroebnerBasis& groebner(std::optional<MonomialOrder> ord = std::nullopt,
                                  const GroebnerOptions& opt = {}) const;
    /// The canonical basis used for equality/membership: grevlex.
    const GroebnerBasis& canonical_groebner(const GroebnerOptions& opt = {}) const {
        return groebner(MonomialOrder::grevlex(), opt);
    }

    bool is_unit_ideal() const { return canonical_groebner().contains_unit(); }

    std::string to_string() const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, int>, std::shared_ptr<const GroebnerBasis>> by_order;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    bool monomial_flag_ = false;
    std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// k-fold product with the convention I^0 = (1); k >= 0.
Ideal ideal_power(const Ideal& a, int k);

/// Intersection. Monomial inputs take the pairwise-lcm fast path; otherwise
/// eliminate u from u*I + (1-u)*J under a block order.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect_elimination(const Ideal& a, const Ideal& b); // exposed for cross-checks
Ideal intersect_all(const std::vector<Ideal>& ideals, const RingPtr& ring);

/// (I : g) via (I intersect (g)) with exact division by g.
Ideal colon(const Ideal& I, const Polynomial& g);
/// (I : J) as the intersection of (I : g) over the generators of J.
Ideal colon_ideal(const Ideal& I, const Ideal& J);

struct SaturationResult {
    Ideal ideal;
    int exponent; // first e with (I : g^e) = (I : g^(e+1))
};
SaturationResult saturate(const Ideal& I, const Polynomial& g);
/// Single-shot route via the extra variable u and I + (1 - u*g); must agree
/// with the iterated-colon route (cross-check mode).
Ideal saturate_via_rabinowitsch(const Ideal& I, const Polynomial& g);
Ideal saturate_ideal(const Ideal& I, const Ideal& J);

/// Contract to the subring without the given variables, via a block order.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars_to_drop);

/// True iff the reduced grevlex bases coincide.
bool ideal_equal(const Ideal& a, const Ideal& b);

bool ideal_membership(const Polynomial& p, const Ideal& I);

/// Krull dimension of S/I from the initial ideal under grevlex (independent
/// variable sets). Throws input_error on the unit ideal.
int dimension(const Ideal& I);
/// ht I = nvars - dim S/I (ambient rings here are polynomial rings).
int height(const Ideal& I);

/// Rabinowitsch trick: g in sqrt(I) iff 1 in I + (1 - u*g).
bool radical_membership(const Polynomial& g, const Ideal& I);

/// The canonical reduced generators of I, re-sorted into I's own ring.
std::vector<Polynomial> canonical_generators(const Ideal& I);

/// Helper used by several modules: the irrelevant maximal ideal (all vars).
Ideal maximal_ideal(const RingPtr& ring);
/// Generators of m^k: all monomials of total degree exactly k.
std::vector<Polynomial> power_of_maximal_ideal_gens(const RingPtr& ring, int k);

/// Brute-force dimension of a monomial ideal via maximal independent sets,
/// used as the test oracle against dimension().
int monomial_dimension_bruteforce(const std::vector<Monomial>& gens, int nvars);

} // namespace symrees

#endif
