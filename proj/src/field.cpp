#include "symrees/field.hpp"

#include <algorithm>

namespace symrees {

namespace {

// Dense univariate polynomials over Q, lowest degree first, used only for the
// modular arithmetic inside FieldElem. Trailing zeros are trimmed.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; } // -1 for zero

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly sub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

UPoly scale(UPoly a, const Rational& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

// Division with remainder; divisor nonzero.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    UPoly q;
    int db = deg(b);
    Rational lb_inv = b.back().inverse();
    while (deg(a) >= db) {
        int shift = deg(a) - db;
        Rational c = a.back() * lb_inv;
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] += c;
        for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

} // namespace

FieldConfigPtr FieldConfig::rationals() {
    static FieldConfigPtr instance = [] {
        auto c = std::shared_ptr<FieldConfig>(new FieldConfig());
        c->kind_ = Kind::rationals;
        c->degree_ = 1;
        c->generator_name_.clear();
        return c;
    }();
    return instance;
}

FieldConfigPtr FieldConfig::number_field(std::vector<Rational> modulus, std::string generator_name) {
    if (modulus.size() < 2) throw input_error("number field modulus must have degree >= 1");
    if (!modulus.back().is_one()) throw input_error("number field modulus must be monic");
    auto c = std::shared_ptr<FieldConfig>(new FieldConfig());
    c->kind_ = Kind::number_field;
    c->degree_ = static_cast<int>(modulus.size()) - 1;
    c->modulus_ = std::move(modulus);
    c->generator_name_ = std::move(generator_name);
    return c;
}

bool FieldConfig::same(const FieldConfig& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_ || degree_ != o.degree_) return false;
    return modulus_ == o.modulus_;
}

std::string FieldConfig::to_string() const {
    if (is_rationals()) return "Q";
    std::string s = "Q(" + generator_name_ + "|";
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
        const Rational& c = modulus_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Rational a = c;
        if (!first) {
            s += (a.sign() < 0) ? "-" : "+";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            s += a.to_string();
        } else {
            if (!a.is_one()) s += a.to_string() + "*";
            s += generator_name_;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    s += ")";
    return s;
}

FieldElem FieldElem::zero(const FieldConfigPtr& cfg) {
    return FieldElem(cfg, std::vector<Rational>(static_cast<size_t>(cfg->degree()), Rational(0)));
}

FieldElem FieldElem::one(const FieldConfigPtr& cfg) {
    auto e = zero(cfg);
    e.c_[0] = Rational(1);
    return e;
}

FieldElem FieldElem::from_rational(const FieldConfigPtr& cfg, const Rational& r) {
    auto e = zero(cfg);
    e.c_[0] = r;
    return e;
}

FieldElem FieldElem::from_coeffs(const FieldConfigPtr& cfg, std::vector<Rational> coeffs) {
    if (static_cast<int>(coeffs.size()) != cfg->degree())
        throw mismatch_error("coefficient vector length does not match field degree");
    return FieldElem(cfg, std::move(coeffs));
}

FieldElem FieldElem::generator(const FieldConfigPtr& cfg) {
    if (cfg->is_rationals()) throw input_error("the rational field has no generator element");
    auto e = zero(cfg);
    e.c_[1] = Rational(1);
    return e;
}

Rational FieldElem::rational_value() const {
    if (!is_rational()) throw input_error("field element is not rational");
    return c_[0];
}

bool FieldElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool FieldElem::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

void FieldElem::check_same_config(const FieldElem& o) const {
    if (cfg_ == o.cfg_) return;
    if (!cfg_ || !o.cfg_ || !cfg_->same(*o.cfg_))
        throw mismatch_error("field elements have different configurations");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_config(o);
    auto r = c_;
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return FieldElem(cfg_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_config(o);
    auto r = c_;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return FieldElem(cfg_, std::move(r));
}

FieldElem FieldElem::operator-() const {
    auto r = c_;
    for (auto& x : r) x = -x;
    return FieldElem(cfg_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_config(o);
    if (cfg_->is_rationals()) {
        return FieldElem(cfg_, {c_[0] * o.c_[0]});
    }
    UPoly a = c_, b = o.c_;
    trim(a);
    trim(b);
    UPoly prod = mul(a, b);
    if (deg(prod) >= cfg_->degree()) prod = divmod(std::move(prod), cfg_->modulus()).second;
    prod.resize(static_cast<size_t>(cfg_->degree()), Rational(0));
    return FieldElem(cfg_, std::move(prod));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw division_error("inverse of zero field element");
    if (cfg_->is_rationals()) return FieldElem(cfg_, {c_[0].inverse()});

    // Extended Euclid on (lift, modulus): maintain r = s*lift + t*modulus.
    UPoly r0 = cfg_->modulus();
    UPoly r1 = c_;
    trim(r1);
    UPoly s0 = {};             // coefficient of lift for r0
    UPoly s1 = {Rational(1)};  // coefficient of lift for r1
    while (deg(r1) > 0) {
        auto [q, rem] = divmod(r0, r1);
        UPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) {
            // gcd = r0 with deg > 0: zero divisor found, the modulus is composite.
            throw non_invertible_error(
                "field element not invertible: modulus " + cfg_->to_string() + " is composite");
        }
    }
    // r1 is a nonzero constant: inverse = s1 / r1.
    UPoly inv = scale(std::move(s1), r1[0].inverse());
    if (deg(inv) >= cfg_->degree()) inv = divmod(std::move(inv), cfg_->modulus()).second;
    inv.resize(static_cast<size_t>(cfg_->degree()), Rational(0));
    return FieldElem(cfg_, std::move(inv));
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem acc = one(cfg_);
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (cfg_ != o.cfg_ && (!cfg_ || !o.cfg_ || !cfg_->same(*o.cfg_))) return false;
    return c_ == o.c_;
}

std::string FieldElem::to_string() const {
    if (cfg_->is_rationals() || is_rational()) return c_[0].to_string();
    std::string s;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational a = c_[i];
        if (first) {
            if (a.sign() < 0) { s += "-"; a = -a; }
        } else {
            s += (a.sign() < 0) ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            s += a.to_string();
        } else {
            if (!a.is_one()) s += a.to_string() + "*";
            s += cfg_->generator_name();
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    if (first) s = "0";
    return s;
}

bool FieldElem::needs_parens() const {
    int nonzero = 0;
    for (const auto& x : c_)
        if (!x.is_zero()) ++nonzero;
    return nonzero > 1;
}

size_t FieldElem::hash() const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& x : c_) h = h * 1099511628211ULL ^ x.hash();
    return h;
}

} // namespace symrees
