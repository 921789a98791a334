#include "symrees/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <list>
#include <set>

#include "symrees/errors.hpp"

namespace symrees {

namespace {
std::atomic<int> g_default_degree_cap{60};
}

int default_degree_cap() { return g_default_degree_cap.load(); }
void set_default_degree_cap(int cap) { g_default_degree_cap.store(cap); }

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G, int truncation_degree) {
    if (p.is_zero()) return p;
    const RingPtr& ring = p.ring();
    Polynomial work = truncation_degree >= 0 ? p.truncated(truncation_degree) : p;
    std::vector<Polynomial::Term> remainder;

    while (!work.is_zero()) {
        const auto& lt = work.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : G) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.m)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            remainder.push_back(lt);
            work = work - Polynomial::term(ring, lt.m, lt.c);
            continue;
        }
        Monomial q = lt.m / reducer->leading_monomial();
        FieldElem c = -(lt.c * reducer->leading_coeff().inverse());
        work = work.fma_term(c, q, *reducer);
        if (truncation_degree >= 0) work = work.truncated(truncation_degree);
    }
    return Polynomial::from_terms(ring, std::move(remainder));
}

namespace {

struct Pair {
    size_t i, j;
    Monomial lcm;
    int lcm_deg;
};

// Tail-reduces each element against the others and sorts: canonical output.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const RingPtr& ring,
                                     int truncation) {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, truncation);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_monomial(), b.leading_monomial(), ring->order()) == Cmp::LT;
    });
    return reduced;
}

} // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const GroebnerOptions& opt) {
    RingPtr ring;
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring) ring = g.ring();
        else check_same_ring(ring, g.ring());
        Polynomial p = opt.truncation_degree >= 0 ? g.truncated(opt.truncation_degree) : g;
        if (!p.is_zero()) basis.push_back(p.monic());
    }
    if (!ring && !gens.empty()) ring = gens.front().ring();
    if (basis.empty()) return GroebnerBasis{ring, {}};
    if (opt.truncation_degree >= 0 && !ring->order().degree_compatible())
        throw input_error("truncated Groebner bases need a degree-compatible order");

    auto is_monomial = [](const Polynomial& p) { return p.term_count() == 1; };

    std::list<Pair> pending;
    std::set<std::pair<size_t, size_t>> pending_keys;
    auto push_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            // S-polynomial of two monomials is identically zero
            if (is_monomial(basis[i]) && is_monomial(basis[k])) continue;
            Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[k].leading_monomial());
            pending.push_back(Pair{i, k, l, l.degree()});
            pending_keys.insert({i, k});
        }
    };
    for (size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    auto pair_pending = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        return pending_keys.count({a, b}) != 0;
    };

    while (!pending.empty()) {
        // normal strategy: smallest lcm under the active order
        auto best = pending.begin();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            if (it->lcm_deg < best->lcm_deg ||
                (it->lcm_deg == best->lcm_deg &&
                 compare(it->lcm, best->lcm, ring->order()) == Cmp::LT))
                best = it;
        }
        Pair pr = *best;
        pending.erase(best);
        pending_keys.erase({pr.i, pr.j});

        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        // first criterion: coprime leading monomials
        if (f.leading_monomial().coprime(g.leading_monomial())) continue;
        // chain criterion: some k with lt(k) | lcm(i,j) and both side pairs done
        {
            bool skip = false;
            for (size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (basis[k].leading_monomial().divides(pr.lcm) &&
                    !pair_pending(pr.i, k) && !pair_pending(pr.j, k))
                    skip = true;
            }
            if (skip) continue;
        }
        if (opt.truncation_degree < 0 && pr.lcm_deg > opt.degree_cap)
            throw resource_error("S-polynomial degree " + std::to_string(pr.lcm_deg) +
                                 " exceeds the configured cap " + std::to_string(opt.degree_cap));

        Monomial qf = pr.lcm / f.leading_monomial();
        Monomial qg = pr.lcm / g.leading_monomial();
        // both inputs are monic
        Polynomial s = Polynomial::zero(ring)
                           .fma_term(FieldElem::one(ring->field()), qf, f)
                           .fma_term(-FieldElem::one(ring->field()), qg, g);
        Polynomial r = normal_form(s, basis, opt.truncation_degree);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        push_pairs_for(basis.size() - 1);
    }

    return GroebnerBasis{ring, reduce_basis(std::move(basis), ring, opt.truncation_degree)};
}

} // namespace symrees
