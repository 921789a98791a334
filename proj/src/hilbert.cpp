#include "symrees/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "symrees/errors.hpp"

namespace symrees {

IntPoly IntPoly::monomial(int deg, const mpz_class& coeff) {
    IntPoly p;
    p.c.resize(static_cast<size_t>(deg) + 1, mpz_class(0));
    p.c.back() = coeff;
    p.trim();
    return p;
}

bool IntPoly::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class IntPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& x : c) s += x;
    return s;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    IntPoly r;
    r.c.resize(c.size() + o.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (c.empty()) return {};
    IntPoly r;
    r.c.resize(c.size() + static_cast<size_t>(k), mpz_class(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i + static_cast<size_t>(k)] = c[i];
    return r;
}

IntPoly IntPoly::divided_by_one_minus_u() const {
    // h = (1-u) q  =>  q_i = h_0 + h_1 + ... + h_i, telescoping from the left
    IntPoly q;
    if (c.empty()) return q;
    q.c.resize(c.size() - 1, mpz_class(0));
    mpz_class acc = 0;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
        acc += c[i];
        q.c[i] = acc;
    }
    acc += c.back();
    if (acc != 0) throw input_error("integer polynomial not divisible by (1-u)");
    q.trim();
    return q;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpz_class a = c[i];
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            s += a.get_str();
        } else {
            if (a != 1) s += a.get_str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

HilbertSeries HilbertSeries::from_numerator(IntPoly h, int nvars) {
    HilbertSeries hs;
    hs.numerator = h;
    hs.ambient_vars = nvars;
    int cancels = 0;
    IntPoly red = std::move(h);
    while (!red.is_zero() && red.eval_one() == 0) {
        red = red.divided_by_one_minus_u();
        ++cancels;
    }
    hs.reduced = std::move(red);
    hs.dim = nvars - cancels;
    hs.degree_e = hs.reduced.eval_one();
    return hs;
}

std::string HilbertSeries::to_string() const {
    return "(" + numerator.to_string() + ") / (1-u)^" + std::to_string(ambient_vars);
}

namespace {

using ExpVec = std::vector<int32_t>;

std::vector<ExpVec> minimal_monomial_gens(std::vector<ExpVec> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExpVec> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            bool divides = true;
            for (size_t k = 0; k < gens[i].size(); ++k)
                if (gens[j][k] > gens[i][k]) { divides = false; break; }
            if (divides && gens[j] != gens[i]) redundant = true;
            if (divides && gens[j] == gens[i] && j < i) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct MonomialHilbert {
    std::map<std::vector<ExpVec>, IntPoly> memo;
    size_t nvars;

    IntPoly numerator(std::vector<ExpVec> gens) {
        gens = minimal_monomial_gens(std::move(gens));
        if (gens.empty()) return IntPoly::one();
        for (const auto& g : gens) {
            bool one = true;
            for (auto e : g)
                if (e) { one = false; break; }
            if (one) return IntPoly::zero(); // unit ideal
        }
        auto it = memo.find(gens);
        if (it != memo.end()) return it->second;

        IntPoly result;
        // pure-power base case: inclusion-exclusion collapses to a product
        bool all_pure = true;
        for (const auto& g : gens) {
            int support = 0;
            for (auto e : g)
                if (e) ++support;
            if (support > 1) { all_pure = false; break; }
        }
        if (all_pure) {
            result = IntPoly::one();
            for (const auto& g : gens) {
                int d = 0;
                for (auto e : g) d += e;
                result = result * (IntPoly::one() - IntPoly::monomial(d, 1));
            }
        } else {
            // pivot: the most frequent variable among non-pure-power generators
            std::vector<int> freq(nvars, 0);
            for (const auto& g : gens) {
                int support = 0;
                for (auto e : g)
                    if (e) ++support;
                if (support > 1)
                    for (size_t i = 0; i < nvars; ++i)
                        if (g[i]) ++freq[i];
            }
            size_t piv = static_cast<size_t>(
                std::max_element(freq.begin(), freq.end()) - freq.begin());
            std::vector<ExpVec> plus;   // I + (x_piv)
            std::vector<ExpVec> quot;   // I : x_piv
            ExpVec pv(nvars, 0);
            pv[piv] = 1;
            for (const auto& g : gens) {
                if (g[piv] == 0) plus.push_back(g);
                ExpVec q = g;
                if (q[piv] > 0) --q[piv];
                quot.push_back(std::move(q));
            }
            plus.push_back(pv);
            result = numerator(std::move(plus)) + numerator(std::move(quot)).shifted(1);
        }
        memo.emplace(std::move(gens), result);
        return result;
    }
};

std::vector<ExpVec> leading_exponents(const GroebnerBasis& gb) {
    std::vector<ExpVec> out;
    for (const auto& g : gb.elems) out.push_back(g.leading_monomial().e);
    return out;
}

} // namespace

HilbertSeries hilbert_series_monomial(const Ideal& I) {
    if (!I.monomial() && !I.is_zero_ideal())
        throw input_error("hilbert_series_monomial requires a monomial ideal");
    std::vector<ExpVec> gens;
    for (const auto& g : I.gens()) gens.push_back(g.leading_monomial().e);
    MonomialHilbert engine{{}, static_cast<size_t>(I.ring()->nvars())};
    return HilbertSeries::from_numerator(engine.numerator(std::move(gens)), I.ring()->nvars());
}

HilbertSeries hilbert_series(const Ideal& I) {
    if (!I.homogeneous_generators())
        throw input_error("hilbert_series requires homogeneous generators");
    MonomialOrder ord = I.ring()->order().degree_compatible() ? I.ring()->order()
                                                              : MonomialOrder::grevlex();
    const GroebnerBasis& gb = I.groebner(ord);
    MonomialHilbert engine{{}, static_cast<size_t>(I.ring()->nvars())};
    return HilbertSeries::from_numerator(engine.numerator(leading_exponents(gb)),
                                         I.ring()->nvars());
}

mpz_class multiplicity(const Ideal& I) {
    HilbertSeries hs = hilbert_series(I);
    if (hs.reduced.is_zero()) throw input_error("multiplicity of the unit ideal");
    return hs.degree_e;
}

mpz_class artinian_length(const Ideal& I, const GroebnerOptions& opt) {
    const GroebnerBasis& gb = I.canonical_groebner(opt);
    if (gb.contains_unit()) return 0;
    MonomialHilbert engine{{}, static_cast<size_t>(I.ring()->nvars())};
    IntPoly h = engine.numerator(leading_exponents(gb));
    HilbertSeries hs = HilbertSeries::from_numerator(std::move(h), I.ring()->nvars());
    if (hs.dim != 0)
        throw input_error("artinian_length requires dim S/I = 0, got " + std::to_string(hs.dim));
    return hs.degree_e;
}

mpz_class artinian_length_bruteforce(const Ideal& I) {
    const GroebnerBasis& gb = I.canonical_groebner();
    if (gb.contains_unit()) return 0;
    int n = I.ring()->nvars();
    std::vector<Monomial> lts;
    for (const auto& g : gb.elems) lts.push_back(g.leading_monomial());
    // bounds: each variable must occur as a pure power or the count is infinite
    std::vector<int32_t> bound(static_cast<size_t>(n), -1);
    for (const auto& m : lts) {
        int support = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (m.e[static_cast<size_t>(i)] > 0) {
                if (support >= 0) { pure = false; break; }
                support = i;
            }
        }
        if (pure && support >= 0) {
            int32_t d = m.e[static_cast<size_t>(support)];
            if (bound[static_cast<size_t>(support)] < 0 || d < bound[static_cast<size_t>(support)])
                bound[static_cast<size_t>(support)] = d;
        }
    }
    for (int i = 0; i < n; ++i)
        if (bound[static_cast<size_t>(i)] < 0)
            throw input_error("artinian_length requires dim S/I = 0");
    mpz_class count = 0;
    Monomial probe(static_cast<size_t>(n));
    std::function<void(int)> rec = [&](int var) {
        if (var == n) {
            for (const auto& m : lts)
                if (m.divides(probe)) return;
            ++count;
            return;
        }
        for (int32_t e = 0; e < bound[static_cast<size_t>(var)]; ++e) {
            probe.e[static_cast<size_t>(var)] = e;
            rec(var + 1);
        }
        probe.e[static_cast<size_t>(var)] = 0;
    };
    rec(0);
    return count;
}

namespace {

/// Rewrites the generators modulo the homogeneous linear ones: each linear form
/// eliminates one variable by substitution, shrinking the ring. This is a
/// degree-preserving coordinate change on the local ring at the origin.
struct LinearReduction {
    RingPtr ring;
    std::vector<Polynomial> gens;
    int eliminated = 0;
};

LinearReduction reduce_linear_generators(const Ideal& I) {
    LinearReduction st{I.ring(), I.gens(), 0};
    for (;;) {
        int which = -1;
        for (size_t i = 0; i < st.gens.size(); ++i)
            if (st.gens[i].is_linear_form()) { which = static_cast<int>(i); break; }
        if (which < 0) return st;
        Polynomial lin = st.gens[static_cast<size_t>(which)];
        st.gens.erase(st.gens.begin() + which);
        // solve for the first variable with nonzero coefficient
        int var = -1;
        FieldElem coeff;
        for (const auto& t : lin.terms()) {
            for (size_t i = 0; i < t.m.e.size(); ++i)
                if (t.m.e[i] == 1) {
                    if (var < 0 || static_cast<int>(i) < var) { var = static_cast<int>(i); coeff = t.c; }
                    break;
                }
        }
        // substitute var := var - lin/coeff, i.e. var maps to -(lin - coeff*var)/coeff
        Polynomial rest = lin - Polynomial::term(st.ring, Polynomial::variable(st.ring, var).leading_monomial(), coeff);
        Polynomial image = rest.scaled(-(coeff.inverse()));
        std::map<int, Polynomial> sub{{var, image}};
        for (auto& g : st.gens) g = g.substitute(sub);
        std::erase_if(st.gens, [](const Polynomial& g) { return g.is_zero(); });
        // drop the variable from the ring
        std::vector<std::string> vars;
        std::vector<int> down(static_cast<size_t>(st.ring->nvars()), -1);
        for (int i = 0; i < st.ring->nvars(); ++i) {
            if (i == var) continue;
            down[static_cast<size_t>(i)] = static_cast<int>(vars.size());
            vars.push_back(st.ring->var_name(i));
        }
        if (vars.empty()) {
            st.ring = nullptr; // everything eliminated: S/I is the base field
            st.gens.clear();
            ++st.eliminated;
            return st;
        }
        RingPtr sub_ring = RingContext::make(st.ring->field(), vars, MonomialOrder::grevlex());
        for (auto& g : st.gens) g = g.mapped(sub_ring, down);
        st.ring = sub_ring;
        ++st.eliminated;
    }
}

// True iff the origin avoids V(I : m^infty), i.e. is not on a component of
// V(I) of positive dimension (the saturation strips the m-primary part).
bool origin_isolated(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    Ideal I(ring, gens);
    Ideal sat = saturate_ideal(I, maximal_ideal(ring));
    if (sat.is_unit_ideal()) return true; // I was m-primary
    for (const auto& g : sat.canonical_groebner().elems) {
        bool has_constant = !g.is_zero() && g.terms().back().m.is_one();
        if (has_constant) return true;
    }
    return false;
}

mpz_class truncated_length(const RingPtr& ring, const std::vector<Polynomial>& gens, int N,
                           int degree_cap) {
    std::vector<Polynomial> all = gens;
    auto mN = power_of_maximal_ideal_gens(ring, N);
    all.insert(all.end(), mN.begin(), mN.end());
    GroebnerOptions opt;
    // truncating at N+1 keeps the m^N generators alive while still bounding
    // every intermediate polynomial (degree >= N+1 terms lie in m^N)
    opt.truncation_degree = N + 1;
    opt.degree_cap = degree_cap;
    RingPtr grl = ring->with_order(MonomialOrder::grevlex());
    for (auto& g : all) g = g.resorted(grl);
    GroebnerBasis gb = buchberger(std::move(all), opt);
    MonomialHilbert engine{{}, static_cast<size_t>(ring->nvars())};
    IntPoly h = engine.numerator(leading_exponents(gb));
    return HilbertSeries::from_numerator(std::move(h), ring->nvars()).degree_e;
}

} // namespace

LocalLengthResult local_length_at_origin(const Ideal& I, const LocalLengthOptions& opt) {
    LinearReduction red = reduce_linear_generators(I);
    if (!red.ring) return {1, 0}; // quotient collapsed to the base field
    if (red.gens.empty()) {
        // I generated by linear forms only but not all variables eliminated:
        // the quotient is a polynomial ring, so the local ring is not artinian
        if (red.ring->nvars() > 0)
            throw resource_error("local length infinite: quotient has positive dimension");
        return {1, 0};
    }
    {
        Ideal probe(red.ring, red.gens);
        if (probe.is_unit_ideal()) return {0, 0};
    }
    if (!origin_isolated(red.ring, red.gens))
        throw resource_error(
            "local length does not stabilize: the origin lies on a positive-dimensional "
            "component of V(I)");

    int maxdeg = 1;
    for (const auto& g : red.gens) maxdeg = std::max(maxdeg, g.total_degree().value_or(1));
    int N = opt.initial_N > 0 ? opt.initial_N : 2 * maxdeg + 2;
    if (N < 2) N = 2;
    mpz_class prev = truncated_length(red.ring, red.gens, N, opt.degree_cap);
    while (2 * N <= opt.n_cap) {
        int N2 = 2 * N;
        mpz_class next = truncated_length(red.ring, red.gens, N2, opt.degree_cap);
        if (next == prev) return {prev, N};
        prev = next;
        N = N2;
    }
    throw resource_error("local length did not stabilize within the N cap " +
                         std::to_string(opt.n_cap));
}

bool origin_is_isolated_zero(const Ideal& I) {
    LinearReduction red = reduce_linear_generators(I);
    if (!red.ring) return true;
    if (red.gens.empty()) return red.ring->nvars() == 0;
    return origin_isolated(red.ring, red.gens);
}

mpz_class local_length_via_component(const Ideal& I) {
    LinearReduction red = reduce_linear_generators(I);
    if (!red.ring) return 1;
    if (red.gens.empty()) {
        if (red.ring->nvars() > 0)
            throw resource_error("local length infinite: quotient has positive dimension");
        return 1;
    }
    Ideal J(red.ring, red.gens);
    if (J.is_unit_ideal()) return 0;
    Ideal sat = saturate_ideal(J, maximal_ideal(red.ring));
    if (sat.is_unit_ideal()) return artinian_length(J);
    // find an element of sat with nonzero constant term; fail if none
    const Polynomial* witness = nullptr;
    for (const auto& g : sat.canonical_groebner().elems)
        if (g.terms().back().m.is_one()) { witness = &g; break; }
    if (!witness)
        throw resource_error(
            "local length infinite: origin lies on a positive-dimensional component");
    Ideal primary = saturate(J, *witness).ideal;
    return artinian_length(primary);
}

GradedSopResult multiplicity_of_graded_sop(const std::vector<Polynomial>& forms, const Ideal& P) {
    for (const auto& f : forms) {
        auto [h, d] = f.homogeneous();
        if (!h || f.is_zero()) throw input_error("graded sop requires nonzero homogeneous forms");
    }
    int d = dimension(P);
    if (static_cast<int>(forms.size()) != d)
        throw input_error("not a sop: expected " + std::to_string(d) + " forms, got " +
                          std::to_string(forms.size()));
    Ideal sum = ideal_sum(P, Ideal(P.ring(), forms));
    mpz_class lam;
    try {
        lam = artinian_length(sum);
    } catch (const input_error&) {
        throw input_error("not a sop: dim S/(P + forms) > 0");
    }
    mpz_class prod = multiplicity(P);
    for (const auto& f : forms) prod *= *f.total_degree();
    return GradedSopResult{lam, prod, lam == prod};
}

} // namespace symrees
