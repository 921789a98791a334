#ifndef SYMREES_FIELD_HPP
#define SYMREES_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "symrees/rational.hpp"

namespace symrees {

class FieldConfig;
using FieldConfigPtr = std::shared_ptr<const FieldConfig>;

/// Coefficient field: either Q itself or a simple extension Q[t]/(f(t)) for a
/// monic modulus f. Irreducibility of the modulus is an assertion by whoever
/// supplies it, not something we verify; a composite modulus surfaces later as
/// a non_invertible_error.
class FieldConfig {
public:
    enum class Kind { rationals, number_field };

    static FieldConfigPtr rationals();

    /// modulus given by coefficients c0 + c1 t + ... + c_deg t^deg, monic.
    static FieldConfigPtr number_field(std::vector<Rational> modulus,
                                       std::string generator_name = "t");

    Kind kind() const { return kind_; }
    int degree() const { return degree_; }
    const std::vector<Rational>& modulus() const { return modulus_; }
    const std::string& generator_name() const { return generator_name_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }

    bool same(const FieldConfig& o) const;
    std::string to_string() const;

private:
    Kind kind_;
    std::vector<Rational> modulus_; // empty for rationals
    int degree_;                    // 1 for rationals
    std::string generator_name_;
    FieldConfig() = default;
};

/// Element of the configured field: a coefficient vector of length equal to the
/// field degree (length 1 over Q). Immutable value semantics.
class FieldElem {
public:
    FieldElem() = default;

    static FieldElem zero(const FieldConfigPtr& cfg);
    static FieldElem one(const FieldConfigPtr& cfg);
    static FieldElem from_rational(const FieldConfigPtr& cfg, const Rational& r);
    static FieldElem from_coeffs(const FieldConfigPtr& cfg, std::vector<Rational> coeffs);
    /// The class of t; requires a number field.
    static FieldElem generator(const FieldConfigPtr& cfg);

    const FieldConfigPtr& config() const { return cfg_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// The rational value, requires the element to lie in Q.
    Rational rational_value() const;
    bool is_rational() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    /// Multiplicative inverse by the extended Euclidean algorithm on
    /// (lift, modulus). Throws division_error on zero and
    /// non_invertible_error if the lift shares a factor with the modulus.
    FieldElem inverse() const;
    FieldElem pow(long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_string() const;
    /// True when printing inside a product needs parentheses (more than one
    /// nonzero coefficient, or a single non-rational term with coeff != 1).
    bool needs_parens() const;

    size_t hash() const;

private:
    FieldElem(FieldConfigPtr cfg, std::vector<Rational> c)
        : cfg_(std::move(cfg)), c_(std::move(c)) {}
    void check_same_config(const FieldElem& o) const;

    FieldConfigPtr cfg_;
    std::vector<Rational> c_;
};

} // namespace symrees

#endif
