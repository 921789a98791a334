#include "symrees/sopfinder.hpp"

#include <random>

#include "symrees/errors.hpp"

namespace symrees {

std::vector<Polynomial> find_linear_sop(const Ideal& a, const std::vector<Ideal>& primes,
                                        int count, const SopSearchConfig& cfg) {
    const RingPtr& ring = a.ring();
    int n = ring->nvars();
    int target_dim = dimension(a);
    if (count != target_dim)
        throw input_error("find_linear_sop: count must equal dim S/a = " +
                          std::to_string(target_dim));
    if (count == 0) return {};

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pool(cfg.pool_min, cfg.pool_max);

    auto next_candidate = [&](int attempt) -> Polynomial {
        if (attempt < n) return Polynomial::variable(ring, attempt);
        for (;;) {
            Polynomial form = Polynomial::zero(ring);
            bool nonzero = false;
            for (int i = 0; i < n; ++i) {
                int c = pool(rng);
                if (c == 0) continue;
                nonzero = true;
                form = form + Polynomial::variable(ring, i).scaled(
                                  FieldElem::from_rational(ring->field(), Rational(c)));
            }
            if (nonzero) return form;
        }
    };

    auto avoids_primes = [&](const Polynomial& form) {
        for (const auto& P : primes)
            if (ideal_membership(form, P)) return false;
        return true;
    };

    std::vector<Polynomial> chosen;
    int attempt = 0;
    while (static_cast<int>(chosen.size()) < count) {
        if (attempt >= cfg.max_attempts + n)
            throw resource_error("find_linear_sop exhausted its attempt budget");
        Polynomial cand = next_candidate(attempt++);
        if (!avoids_primes(cand)) continue;
        // incremental dimension drop: a + chosen + cand must lose one dimension
        std::vector<Polynomial> gens = a.gens();
        gens.insert(gens.end(), chosen.begin(), chosen.end());
        gens.push_back(cand);
        Ideal probe(ring, gens);
        if (probe.is_unit_ideal()) continue;
        int d = dimension(probe);
        if (d != target_dim - static_cast<int>(chosen.size()) - 1) continue;
        chosen.push_back(std::move(cand));
    }
    return chosen;
}

} // namespace symrees
