#include "symrees/ideal.hpp"

#include <algorithm>
#include <functional>

#include "symrees/errors.hpp"

namespace symrees {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        check_same_ring(ring_, g.ring());
        gens_.push_back(std::move(g));
    }
    monomial_flag_ = !gens_.empty();
    for (const auto& g : gens_)
        if (!g.is_term()) { monomial_flag_ = false; break; }
}

Ideal Ideal::unit(const RingPtr& ring) {
    return Ideal(ring, {Polynomial::constant(ring, Rational(1))});
}

bool Ideal::homogeneous_generators() const {
    for (const auto& g : gens_)
        if (!g.homogeneous().first) return false;
    return true;
}

const GroebnerBasis& Ideal::groebner(std::optional<MonomialOrder> ord,
                                     const GroebnerOptions& opt) const {
    MonomialOrder order = ord.value_or(ring_->order());
    std::pair<int, int> key{static_cast<int>(order.kind), order.block_split};
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->by_order.find(key);
        if (it != cache_->by_order.end()) return *it->second;
    }
    std::vector<Polynomial> gens = gens_;
    RingPtr target = ring_->with_order(order);
    if (!(order == ring_->order()))
        for (auto& g : gens) g = g.resorted(target);
    auto gb = std::make_shared<GroebnerBasis>(buchberger(std::move(gens), opt));
    if (!gb->ring) gb->ring = target;
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->by_order.emplace(key, gb);
    return *it->second; // idempotent: canonical value either way
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    if (gens_.empty()) s += "0";
    return s + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) {
            Polynomial p = f * g;
            bool dup = false;
            for (const auto& h : gens)
                if (h == p) { dup = true; break; }
            if (!dup) gens.push_back(std::move(p));
        }
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, int k) {
    if (k < 0) throw input_error("negative ideal power");
    if (k == 0) return Ideal::unit(a.ring());
    if (a.is_zero_ideal()) return a;
    // multiset combinations of generators avoid duplicate products
    size_t m = a.gens().size();
    std::vector<Polynomial> out;
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    for (;;) {
        Polynomial prod = a.gens()[idx[0]];
        for (int t = 1; t < k; ++t) prod = prod * a.gens()[idx[static_cast<size_t>(t)]];
        out.push_back(std::move(prod));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - 1) --pos;
        if (pos < 0) break;
        size_t next = idx[static_cast<size_t>(pos)] + 1;
        for (int t = pos; t < k; ++t) idx[static_cast<size_t>(t)] = next;
    }
    return Ideal(a.ring(), std::move(out));
}

namespace {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
    std::vector<Monomial> out;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& o : ms) {
            if (&o == &m) continue;
            if (o.divides(m) && !(o == m)) { redundant = true; break; }
        }
        if (!redundant) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Builds the ring [u, x1..xn] with a block order eliminating u.
RingPtr extend_ring_front(const RingPtr& ring, const std::string& aux) {
    std::vector<std::string> vars;
    vars.push_back(aux);
    for (const auto& v : ring->vars()) vars.push_back(v);
    return RingContext::make(ring->field(), std::move(vars), MonomialOrder::block(1));
}

} // namespace

Ideal intersect_elimination(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    const RingPtr& ring = a.ring();
    if (a.is_zero_ideal()) return a;
    if (b.is_zero_ideal()) return b;
    RingPtr ext = extend_ring_front(ring, "@u");
    std::vector<int> up(static_cast<size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i) up[static_cast<size_t>(i)] = i + 1;
    Polynomial u = Polynomial::variable(ext, 0);
    Polynomial one_minus_u = Polynomial::constant(ext, Rational(1)) - u;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(u * f.mapped(ext, up));
    for (const auto& g : b.gens()) gens.push_back(one_minus_u * g.mapped(ext, up));
    GroebnerBasis gb = buchberger(std::move(gens));
    std::vector<int> down(static_cast<size_t>(ext->nvars()), -1);
    for (int i = 0; i < ring->nvars(); ++i) down[static_cast<size_t>(i + 1)] = i;
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elems) {
        bool has_u = false;
        for (const auto& t : g.terms())
            if (t.m.e[0] != 0) { has_u = true; break; }
        if (!has_u) kept.push_back(g.mapped(ring, down));
    }
    return Ideal(ring, std::move(kept));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    if (a.monomial() && b.monomial()) {
        std::vector<Monomial> ms;
        for (const auto& f : a.gens())
            for (const auto& g : b.gens())
                ms.push_back(Monomial::lcm(f.leading_monomial(), g.leading_monomial()));
        std::vector<Polynomial> gens;
        for (auto& m : minimalize_monomials(std::move(ms)))
            gens.push_back(Polynomial::term(a.ring(), m, FieldElem::one(a.ring()->field())));
        return Ideal(a.ring(), std::move(gens));
    }
    return intersect_elimination(a, b);
}

Ideal intersect_all(const std::vector<Ideal>& ideals, const RingPtr& ring) {
    if (ideals.empty()) return Ideal::unit(ring);
    Ideal acc = ideals.front();
    for (size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
    return acc;
}

namespace {

// Exact division p / g; internal assertion, failure indicates a bug upstream.
Polynomial divide_exact(const Polynomial& p, const Polynomial& g) {
    if (p.is_zero()) return p;
    Polynomial rem = p;
    std::vector<Polynomial::Term> quot;
    FieldElem lcinv = g.leading_coeff().inverse();
    while (!rem.is_zero()) {
        const auto& lt = rem.leading_term();
        if (!g.leading_monomial().divides(lt.m))
            throw division_error("internal: inexact polynomial division in colon");
        Monomial qm = lt.m / g.leading_monomial();
        FieldElem qc = lt.c * lcinv;
        quot.push_back({qm, qc});
        rem = rem.fma_term(-qc, qm, g);
    }
    return Polynomial::from_terms(p.ring(), std::move(quot));
}

} // namespace

Ideal colon(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw input_error("colon by zero polynomial");
    check_same_ring(I.ring(), g.ring());
    if (g.is_constant()) return I; // unit divisor
    if (I.is_zero_ideal()) return I;
    Ideal inter = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> gens;
    for (const auto& f : inter.gens()) gens.push_back(divide_exact(f, g));
    return Ideal(I.ring(), std::move(gens));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
    if (J.is_zero_ideal()) throw input_error("colon by the zero ideal");
    Ideal acc = colon(I, J.gens().front());
    for (size_t i = 1; i < J.gens().size(); ++i) acc = intersect(acc, colon(I, J.gens()[i]));
    return acc;
}

namespace {
constexpr int kSaturationIterationCap = 64;
}

SaturationResult saturate(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw input_error("saturation at zero polynomial");
    Ideal prev = I;
    for (int e = 0; e < kSaturationIterationCap; ++e) {
        Ideal next = colon(prev, g);
        if (ideal_equal(prev, next)) return {prev, e};
        prev = next;
    }
    throw resource_error("saturation did not stabilize within the iteration cap");
}

Ideal saturate_via_rabinowitsch(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw input_error("saturation at zero polynomial");
    const RingPtr& ring = I.ring();
    RingPtr ext = extend_ring_front(ring, "@u");
    std::vector<int> up(static_cast<size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i) up[static_cast<size_t>(i)] = i + 1;
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(f.mapped(ext, up));
    gens.push_back(Polynomial::constant(ext, Rational(1)) -
                   Polynomial::variable(ext, 0) * g.mapped(ext, up));
    GroebnerBasis gb = buchberger(std::move(gens));
    std::vector<int> down(static_cast<size_t>(ext->nvars()), -1);
    for (int i = 0; i < ring->nvars(); ++i) down[static_cast<size_t>(i + 1)] = i;
    std::vector<Polynomial> kept;
    for (const auto& h : gb.elems) {
        bool has_u = false;
        for (const auto& t : h.terms())
            if (t.m.e[0] != 0) { has_u = true; break; }
        if (!has_u) kept.push_back(h.mapped(ring, down));
    }
    return Ideal(ring, std::move(kept));
}

Ideal saturate_ideal(const Ideal& I, const Ideal& J) {
    if (J.is_zero_ideal()) throw input_error("saturation at the zero ideal");
    Ideal prev = I;
    for (int e = 0; e < kSaturationIterationCap; ++e) {
        Ideal next = colon_ideal(prev, J);
        if (ideal_equal(prev, next)) return prev;
        prev = next;
    }
    throw resource_error("ideal saturation did not stabilize within the iteration cap");
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars_to_drop) {
    const RingPtr& ring = I.ring();
    std::vector<bool> drop(static_cast<size_t>(ring->nvars()), false);
    for (int v : vars_to_drop) {
        if (v < 0 || v >= ring->nvars()) throw input_error("eliminate: variable out of range");
        drop[static_cast<size_t>(v)] = true;
    }
    int ndrop = static_cast<int>(std::count(drop.begin(), drop.end(), true));
    if (ndrop == 0) {
        // contract of eliminate-nothing: the reduced basis of I
        return Ideal(ring, I.canonical_groebner().elems);
    }
    // permuted ring: dropped variables first, block order eliminating them
    std::vector<std::string> vars;
    std::vector<int> up(static_cast<size_t>(ring->nvars()), -1);
    for (int i = 0; i < ring->nvars(); ++i)
        if (drop[static_cast<size_t>(i)]) {
            up[static_cast<size_t>(i)] = static_cast<int>(vars.size());
            vars.push_back(ring->var_name(i));
        }
    std::vector<std::string> kept_names;
    std::vector<int> kept_idx;
    for (int i = 0; i < ring->nvars(); ++i)
        if (!drop[static_cast<size_t>(i)]) {
            up[static_cast<size_t>(i)] = static_cast<int>(vars.size());
            vars.push_back(ring->var_name(i));
            kept_names.push_back(ring->var_name(i));
            kept_idx.push_back(i);
        }
    RingPtr ext = RingContext::make(ring->field(), vars, MonomialOrder::block(ndrop));
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(f.mapped(ext, up));
    GroebnerBasis gb = buchberger(std::move(gens));

    MonomialOrder sub_order = ring->order();
    if (sub_order.kind == MonomialOrder::Kind::block) sub_order = MonomialOrder::grevlex();
    RingPtr sub = RingContext::make(ring->field(), kept_names, sub_order);
    std::vector<int> down(static_cast<size_t>(ext->nvars()), -1);
    for (size_t j = 0; j < kept_idx.size(); ++j)
        down[static_cast<size_t>(up[static_cast<size_t>(kept_idx[j])])] = static_cast<int>(j);
    std::vector<Polynomial> kept;
    for (const auto& h : gb.elems) {
        bool involves_dropped = false;
        for (const auto& t : h.terms())
            for (int d = 0; d < ndrop && !involves_dropped; ++d)
                if (t.m.e[static_cast<size_t>(d)] != 0) involves_dropped = true;
        if (!involves_dropped) kept.push_back(h.mapped(sub, down));
    }
    return Ideal(sub, std::move(kept));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    check_same_ring(a.ring(), b.ring());
    const auto& ga = a.canonical_groebner().elems;
    const auto& gb = b.canonical_groebner().elems;
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

bool ideal_membership(const Polynomial& p, const Ideal& I) {
    check_same_ring(p.ring(), I.ring());
    if (p.is_zero()) return true;
    const GroebnerBasis& gb = I.canonical_groebner();
    Polynomial q = p.resorted(gb.ring);
    return normal_form(q, gb.elems).is_zero();
}

int monomial_dimension_bruteforce(const std::vector<Monomial>& gens, int nvars) {
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        // Y = variables in mask; independent iff no generator supported in Y
        bool independent = true;
        for (const auto& g : gens) {
            bool inside = true;
            for (int i = 0; i < nvars && inside; ++i)
                if (g.e[static_cast<size_t>(i)] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

int dimension(const Ideal& I) {
    const GroebnerBasis& gb = I.canonical_groebner();
    if (gb.contains_unit()) throw input_error("dimension of the unit ideal");
    if (gb.is_zero_ideal()) return I.ring()->nvars();
    std::vector<Monomial> lts;
    for (const auto& g : gb.elems) lts.push_back(g.leading_monomial());
    return monomial_dimension_bruteforce(lts, I.ring()->nvars());
}

int height(const Ideal& I) { return I.ring()->nvars() - dimension(I); }

bool radical_membership(const Polynomial& g, const Ideal& I) {
    check_same_ring(g.ring(), I.ring());
    const RingPtr& ring = I.ring();
    RingPtr ext = extend_ring_front(ring, "@u");
    std::vector<int> up(static_cast<size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i) up[static_cast<size_t>(i)] = i + 1;
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(f.mapped(ext, up));
    gens.push_back(Polynomial::constant(ext, Rational(1)) -
                   Polynomial::variable(ext, 0) * g.mapped(ext, up));
    return buchberger(std::move(gens)).contains_unit();
}

std::vector<Polynomial> canonical_generators(const Ideal& I) {
    std::vector<Polynomial> out;
    for (const auto& g : I.canonical_groebner().elems) out.push_back(g.resorted(I.ring()));
    return out;
}

Ideal maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

std::vector<Polynomial> power_of_maximal_ideal_gens(const RingPtr& ring, int k) {
    std::vector<Polynomial> out;
    int n = ring->nvars();
    Monomial m(static_cast<size_t>(n));
    // enumerate all exponent vectors of total degree k
    std::vector<int32_t> stack;
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n - 1) {
            m.e[static_cast<size_t>(var)] = remaining;
            out.push_back(Polynomial::term(ring, m, FieldElem::one(ring->field())));
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m.e[static_cast<size_t>(var)] = e;
            rec(var + 1, remaining - e);
        }
    };
    if (n == 0) return out;
    rec(0, k);
    return out;
}

} // namespace symrees
