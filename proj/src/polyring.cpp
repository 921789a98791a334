#include "symrees/polyring.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "symrees/errors.hpp"

namespace symrees {

namespace {
constexpr int32_t kExponentCap = 100000; // paper-scale degrees stay far below this
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        int64_t s = static_cast<int64_t>(e[i]) + o.e[i];
        if (s > kExponentCap) throw resource_error("monomial exponent overflow");
        r.e[i] = static_cast<int32_t>(s);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        r.e[i] = e[i] - o.e[i];
        if (r.e[i] < 0) throw division_error("monomial division not exact");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

std::string MonomialOrder::to_string() const {
    switch (kind) {
        case Kind::lex: return "lex";
        case Kind::grlex: return "grlex";
        case Kind::grevlex: return "grevlex";
        case Kind::block: return "block " + std::to_string(block_split);
    }
    return "?";
}

namespace {

// grevlex on the index range [lo, hi).
Cmp grevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    for (size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

} // namespace

Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.e.size() != b.e.size()) throw mismatch_error("monomial length mismatch");
    size_t n = a.e.size();
    switch (ord.kind) {
        case MonomialOrder::Kind::lex: {
            for (size_t i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Cmp::GT : Cmp::LT;
            return Cmp::EQ;
        }
        case MonomialOrder::Kind::grlex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::GT : Cmp::LT;
            for (size_t i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Cmp::GT : Cmp::LT;
            return Cmp::EQ;
        }
        case MonomialOrder::Kind::grevlex:
            return grevlex_range(a, b, 0, n);
        case MonomialOrder::Kind::block: {
            size_t k = static_cast<size_t>(ord.block_split);
            if (k > n) throw input_error("block split exceeds variable count");
            Cmp c = grevlex_range(a, b, 0, k);
            if (c != Cmp::EQ) return c;
            return grevlex_range(a, b, k, n);
        }
    }
    return Cmp::EQ;
}

RingPtr RingContext::make(FieldConfigPtr field, std::vector<std::string> vars, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw input_error("empty variable name");
        if (!seen.insert(v).second) throw input_error("duplicate variable name: " + v);
        if (!field->is_rationals() && v == field->generator_name())
            throw input_error("variable name collides with field generator: " + v);
    }
    if (order.kind == MonomialOrder::Kind::block &&
        (order.block_split < 0 || order.block_split > static_cast<int>(vars.size())))
        throw input_error("block split out of range");
    auto r = std::shared_ptr<RingContext>(new RingContext());
    r->field_ = std::move(field);
    r->vars_ = std::move(vars);
    r->order_ = order;
    return r;
}

std::optional<int> RingContext::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool RingContext::same(const RingContext& o) const {
    return same_vars(o) && order_ == o.order_;
}

bool RingContext::same_vars(const RingContext& o) const {
    if (this == &o) return true;
    return field_->same(*o.field_) && vars_ == o.vars_;
}

RingPtr RingContext::with_order(const MonomialOrder& ord) const {
    if (ord == order_) return shared_from_this();
    return make(field_, vars_, ord);
}

std::string RingContext::to_string() const {
    std::string s = field_->to_string() + "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += "] " + order_.to_string();
    return s;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->same(*b)) throw mismatch_error("polynomials from different rings");
}

Polynomial Polynomial::constant(const RingPtr& ring, const FieldElem& c) {
    if (c.is_zero()) return zero(ring);
    return Polynomial(ring, {Term{Monomial(static_cast<size_t>(ring->nvars())), c}});
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
    return constant(ring, FieldElem::from_rational(ring->field(), c));
}

Polynomial Polynomial::variable(const RingPtr& ring, int index) {
    if (index < 0 || index >= ring->nvars()) throw input_error("variable index out of range");
    Monomial m(static_cast<size_t>(ring->nvars()));
    m.e[static_cast<size_t>(index)] = 1;
    return Polynomial(ring, {Term{std::move(m), FieldElem::one(ring->field())}});
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, FieldElem c) {
    if (static_cast<int>(m.e.size()) != ring->nvars())
        throw mismatch_error("monomial length does not match ring");
    if (c.is_zero()) return zero(ring);
    return Polynomial(ring, {Term{std::move(m), std::move(c)}});
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    Polynomial p(ring, std::move(terms));
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    const MonomialOrder& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return compare(a.m, b.m, ord) == Cmp::GT;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (static_cast<int>(t.m.e.size()) != ring_->nvars())
            throw mismatch_error("term monomial length does not match ring");
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = out.back().c + t.c;
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.c.is_zero()) terms_.push_back(std::move(t));
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw input_error("zero polynomial has no leading term");
    return terms_.front();
}

std::optional<int> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

std::pair<bool, std::optional<int>> Polynomial::homogeneous() const {
    if (terms_.empty()) return {true, std::nullopt};
    int d = terms_.front().m.degree();
    for (const auto& t : terms_)
        if (t.m.degree() != d) return {false, std::nullopt};
    return {true, d};
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

bool Polynomial::is_linear_form() const {
    auto [h, d] = homogeneous();
    return h && d && *d == 1;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Cmp c = compare(terms_[i].m, o.terms_[j].m, ord);
        if (c == Cmp::GT) {
            out.push_back(terms_[i++]);
        } else if (c == Cmp::LT) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElem s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) out.push_back(Term{terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.c = -t.c;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::fma_term(const FieldElem& c, const Monomial& m, const Polynomial& g) const {
    check_same_ring(ring_, g.ring_);
    if (c.is_zero() || g.is_zero()) return *this;
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].m * m;
        Cmp cmp = compare(terms_[i].m, gm, ord);
        if (cmp == Cmp::GT) {
            out.push_back(terms_[i++]);
        } else if (cmp == Cmp::LT) {
            FieldElem v = c * g.terms_[j].c;
            if (!v.is_zero()) out.push_back(Term{std::move(gm), std::move(v)});
            ++j;
        } else {
            FieldElem v = terms_[i].c + c * g.terms_[j].c;
            if (!v.is_zero()) out.push_back(Term{terms_[i].m, std::move(v)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) {
        FieldElem v = c * g.terms_[j].c;
        if (!v.is_zero()) out.push_back(Term{g.terms_[j].m * m, std::move(v)});
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial acc = zero(ring_);
    // accumulate via merged adds; fine at the scales this engine targets
    for (const auto& t : terms_) acc = acc.fma_term(t.c, t.m, o);
    return acc;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.c = t.c * c;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw input_error("negative polynomial power");
    Polynomial acc = constant(ring_, FieldElem::one(ring_->field()));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    if (leading_coeff().is_one()) return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::truncated(int degree_bound) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.m.degree() < degree_bound) out.push_back(t);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignments) const {
    for (const auto& [v, p] : assignments) {
        if (v < 0 || v >= ring_->nvars()) throw input_error("substitution of unknown variable");
        check_same_ring(ring_, p.ring());
    }
    Polynomial acc = zero(ring_);
    for (const auto& t : terms_) {
        Polynomial piece = constant(ring_, t.c);
        Monomial rest(t.m.e.size());
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            auto it = assignments.find(static_cast<int>(i));
            if (it == assignments.end()) {
                rest.e[i] = t.m.e[i];
            } else if (t.m.e[i] > 0) {
                piece = piece * it->second.pow(t.m.e[i]);
            }
        }
        acc = acc + piece * term(ring_, std::move(rest), FieldElem::one(ring_->field()));
    }
    return acc;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw input_error("derivative in unknown variable");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int32_t e = t.m.e[static_cast<size_t>(var)];
        if (e == 0) continue;
        Term nt = t;
        nt.m.e[static_cast<size_t>(var)] = e - 1;
        nt.c = nt.c * FieldElem::from_rational(ring_->field(), Rational(e));
        out.push_back(std::move(nt));
    }
    Polynomial p(ring_, std::move(out));
    p.normalize();
    return p;
}

Polynomial Polynomial::resorted(const RingPtr& other) const {
    if (!ring_->same_vars(*other)) throw mismatch_error("resort requires identical variables");
    Polynomial p(other, terms_);
    p.normalize();
    return p;
}

Polynomial Polynomial::mapped(const RingPtr& other, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != ring_->nvars())
        throw mismatch_error("variable map length mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(static_cast<size_t>(other->nvars()));
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            int target = var_map[i];
            if (target < 0)
                throw input_error("polynomial involves a variable dropped by the ring map");
            m.e[static_cast<size_t>(target)] = t.m.e[i];
        }
        out.push_back(Term{std::move(m), t.c});
    }
    Polynomial p(other, std::move(out));
    p.normalize();
    return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        FieldElem c = t.c;
        std::string cs = c.to_string();
        bool negated = false;
        if (!c.needs_parens() && !cs.empty() && cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) s += "-";
        } else {
            s += negated ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var_name(static_cast<int>(i));
            if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
        }
        bool coeff_is_one = !c.needs_parens() && cs == "1";
        if (mono.empty()) {
            s += c.needs_parens() ? "(" + cs + ")" : cs;
        } else if (coeff_is_one) {
            s += mono;
        } else {
            s += (c.needs_parens() ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return s;
}

size_t Polynomial::hash() const {
    size_t h = 14695981039346656037ULL;
    for (const auto& t : terms_) {
        for (int32_t e : t.m.e) h = h * 1099511628211ULL ^ static_cast<size_t>(e + 7);
        h = h * 1099511628211ULL ^ t.c.hash();
    }
    return h;
}

} // namespace symrees
