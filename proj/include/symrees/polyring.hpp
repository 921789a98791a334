#ifndef SYMREES_POLYRING_HPP
#define SYMREES_POLYRING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symrees/field.hpp"

namespace symrees {

/// Exponent vector of fixed length = ring variable count. Dense storage; the
/// variable counts in play stay small (<= 12 including elimination helpers).
struct Monomial {
    std::vector<int32_t> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}

    int degree() const {
        int d = 0;
        for (int32_t x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (int32_t x : e)
            if (x != 0) return false;
        return true;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const;
    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; } // structural, for maps only
};

enum class Cmp { LT, EQ, GT };

/// Monomial order. Block orders eliminate the first `block_split` variables:
/// grevlex on that block first, ties broken by grevlex on the rest.
struct MonomialOrder {
    enum class Kind { lex, grlex, grevlex, block };
    Kind kind = Kind::grevlex;
    int block_split = 0;

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grlex() { return {Kind::grlex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block(int split) { return {Kind::block, split}; }

    bool degree_compatible() const { return kind == Kind::grlex || kind == Kind::grevlex; }
    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::block || block_split == o.block_split);
    }
    std::string to_string() const;
};

Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// A polynomial ring: coefficient field, named variables, and the monomial
/// order under which all polynomials of this ring keep their terms sorted.
class RingContext : public std::enable_shared_from_this<RingContext> {
public:
    static RingPtr make(FieldConfigPtr field, std::vector<std::string> vars, MonomialOrder order);

    const FieldConfigPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const MonomialOrder& order() const { return order_; }

    std::optional<int> var_index(const std::string& name) const;
    const std::string& var_name(int i) const { return vars_[static_cast<size_t>(i)]; }

    /// Same field, same variables, same order.
    bool same(const RingContext& o) const;
    /// Same field and variables, order may differ.
    bool same_vars(const RingContext& o) const;

    /// Sibling ring over the same field/variables with a different order.
    RingPtr with_order(const MonomialOrder& ord) const;

    std::string to_string() const;

private:
    RingContext() = default;
    FieldConfigPtr field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
};

void check_same_ring(const RingPtr& a, const RingPtr& b);

/// Multivariate polynomial: terms sorted strictly descending under the ring's
/// order, no zero coefficients, empty term list <=> zero.
class Polynomial {
public:
    struct Term {
        Monomial m;
        FieldElem c;
    };

    Polynomial() = default;

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring, {}); }
    static Polynomial constant(const RingPtr& ring, const FieldElem& c);
    static Polynomial constant(const RingPtr& ring, const Rational& c);
    static Polynomial variable(const RingPtr& ring, int index);
    static Polynomial term(const RingPtr& ring, Monomial m, FieldElem c);
    /// Terms need not be sorted or combined; zeros dropped.
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().m; }
    const FieldElem& leading_coeff() const { return leading_term().c; }

    /// Max total degree over terms; nullopt for the zero polynomial.
    std::optional<int> total_degree() const;
    /// True with the common degree if all terms share one total degree.
    /// Zero polynomial: homogeneous with no degree (recorded convention).
    std::pair<bool, std::optional<int>> homogeneous() const;
    bool is_constant() const;
    /// Single-term test (monomial with coefficient).
    bool is_term() const { return terms_.size() == 1; }
    bool is_linear_form() const; // homogeneous of degree 1

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElem& c) const;
    /// this + c * m * g, the Buchberger/axpy workhorse.
    Polynomial fma_term(const FieldElem& c, const Monomial& m, const Polynomial& g) const;
    Polynomial pow(int k) const;
    Polynomial monic() const;

    /// Drop every term of total degree >= bound (reduction modulo m^bound).
    Polynomial truncated(int degree_bound) const;

    /// Simultaneous substitution; unmapped variables stay themselves.
    Polynomial substitute(const std::map<int, Polynomial>& assignments) const;
    Polynomial derivative(int var) const;

    /// Same field and variables, different order: re-sorts the terms.
    Polynomial resorted(const RingPtr& other) const;
    /// Maps into `other` sending variable i of this ring to var_map[i] there.
    Polynomial mapped(const RingPtr& other, const std::vector<int>& var_map) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;
    size_t hash() const;

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}
    void normalize(); // sort desc, combine, drop zeros, overflow check

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Parses the polynomial text grammar: identifiers, integer/rational literals,
/// + - * ^ and parentheses; the field generator name (e.g. `t`) is a constant.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

} // namespace symrees

#endif
