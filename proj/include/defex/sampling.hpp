#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "defex/fgab.hpp"

namespace defex {

/// Seeded RNG; every report records the seed so runs replay bit-for-bit.
struct Rng {
    explicit Rng(std::uint64_t seed) : seed(seed), engine(seed) {}
    std::uint64_t seed;
    std::mt19937_64 engine;

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine);
    }
    std::size_t index(std::size_t n) {  // 0..n-1
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine);
    }
    bool coin() { return uniform(0, 1) == 1; }
};

/// Shape of randomly generated objects. The default pool {0, p, p^2, pq}
/// with p = 2, q = 3 keeps instances small while exposing the p^2-torsion
/// phenomena that matter here.
struct SampleProfile {
    std::vector<Int> factor_pool = {Int(0), Int(2), Int(4), Int(6)};
    std::size_t max_generators = 4;
    long presentation_entry_bound = 12;  // 3 * p^2
    long morphism_coeff_bound = 3;
};

/// Random group: invariant factors from the pool, presentation obfuscated
/// by unimodular moves and redundant relators. `size_hint` caps the number
/// of factors (used for small-first counterexample search).
PresentedGroup random_group(Rng& rng, const SampleProfile& profile);
PresentedGroup random_group(Rng& rng, const SampleProfile& profile, std::size_t max_factors);

/// Isomorphic re-presentation of g: unimodular generator changes, relator
/// moves, redundant relator rows.
PresentedGroup re_present(Rng& rng, const PresentedGroup& g, long entry_bound = 12);

/// Uniformly-flavored random element, as a generator-coordinate column.
IntMatrix random_element(Rng& rng, const PresentedGroup& g, long free_bound = 5);

/// Random well-defined morphism g -> h (sampled in canonical coordinates,
/// where the hom-group constraints are diagonal).
GroupMorphism random_morphism(Rng& rng, const PresentedGroup& g, const PresentedGroup& h,
                              long coeff_bound = 3);

}  // namespace defex
