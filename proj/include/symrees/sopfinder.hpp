#ifndef SYMREES_SOPFINDER_HPP
#define SYMREES_SOPFINDER_HPP

#include <cstdint>
#include <vector>

#include "symrees/ideal.hpp"

namespace symrees {

struct SopSearchConfig {
    uint64_t seed = 0;
    int pool_min = -3;
    int pool_max = 3;
    int max_attempts = 200;
};

/// Finds `count` linear forms, each outside every listed prime, with
/// dim S/(a + forms) = 0. Coordinate vectors are tried before seeded random
/// combinations, so the output reproduces the paper's hand choices where those
/// work. Deterministic given the seed. Throws resource_error when the attempt
/// budget is exhausted.
std::vector<Polynomial> find_linear_sop(const Ideal& a, const std::vector<Ideal>& primes,
                                        int count, const SopSearchConfig& cfg = {});

} // namespace symrees

#endif
