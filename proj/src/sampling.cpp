#include "defex/sampling.hpp"

#include <algorithm>

namespace defex {

namespace {

bool entries_within(const IntMatrix& m, long bound) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (abs(m(i, j)) > bound) return false;
    return true;
}

// Random unimodular row/column moves plus redundant relators; the
// isomorphism class is untouched. Moves pushing entries past the bound
// are skipped so instances stay desk-sized.
IntMatrix obfuscate_relations(Rng& rng, IntMatrix rel, std::size_t gens, long bound) {
    std::size_t extra = rng.index(3);
    for (std::size_t e = 0; e < extra && rel.rows() > 0; ++e) {
        IntMatrix row(1, gens);
        std::size_t picks = 1 + rng.index(2);
        for (std::size_t t = 0; t < picks; ++t) {
            std::size_t r = rng.index(rel.rows());
            long c = rng.uniform(-2, 2);
            for (std::size_t j = 0; j < gens; ++j) row(0, j) += c * rel(r, j);
        }
        if (entries_within(row, bound)) rel = IntMatrix::vstack(rel, row);
    }
    std::size_t moves = rng.index(4);
    for (std::size_t t = 0; t < moves; ++t) {
        IntMatrix candidate = rel;
        if (gens >= 2) {
            std::size_t a = rng.index(gens), b = rng.index(gens);
            if (a != b) {
                long f = rng.uniform(-2, 2);
                for (std::size_t i = 0; i < candidate.rows(); ++i)
                    candidate(i, a) += f * candidate(i, b);
            }
        }
        if (candidate.rows() >= 2) {
            std::size_t a = rng.index(candidate.rows()), b = rng.index(candidate.rows());
            if (a != b) {
                long f = rng.uniform(-2, 2);
                for (std::size_t j = 0; j < gens; ++j) candidate(a, j) += f * candidate(b, j);
            }
        }
        if (entries_within(candidate, bound)) rel = candidate;
    }
    return rel;
}

}  // namespace

PresentedGroup random_group(Rng& rng, const SampleProfile& profile) {
    return random_group(rng, profile, profile.max_generators);
}

PresentedGroup random_group(Rng& rng, const SampleProfile& profile, std::size_t max_factors) {
    std::size_t n = rng.index(std::min(max_factors, profile.max_generators) + 1);
    std::vector<Int> factors;
    for (std::size_t i = 0; i < n; ++i)
        factors.push_back(profile.factor_pool[rng.index(profile.factor_pool.size())]);
    PresentedGroup diag = PresentedGroup::from_invariants(factors);
    return re_present(rng, diag, profile.presentation_entry_bound);
}

PresentedGroup re_present(Rng& rng, const PresentedGroup& g, long entry_bound) {
    return PresentedGroup(g.generators(),
                          obfuscate_relations(rng, g.relations(), g.generators(), entry_bound));
}

IntMatrix random_element(Rng& rng, const PresentedGroup& g, long free_bound) {
    IntMatrix w(g.generators(), 1);
    const auto& torsion = g.torsion_diagonal();
    for (std::size_t i = 0; i < g.generators(); ++i) {
        if (torsion[i] == 0)
            w(i, 0) = rng.uniform(-free_bound, free_bound);
        else
            w(i, 0) = rng.uniform(0, torsion[i].get_si() - 1);
    }
    return g.coord_inv() * w;
}

GroupMorphism random_morphism(Rng& rng, const PresentedGroup& g, const PresentedGroup& h,
                              long coeff_bound) {
    const auto& src = g.torsion_diagonal();
    const auto& tgt = h.torsion_diagonal();
    IntMatrix canon(h.generators(), g.generators());
    for (std::size_t j = 0; j < h.generators(); ++j) {
        for (std::size_t i = 0; i < g.generators(); ++i) {
            const Int& d = src[i];
            const Int& c = tgt[j];
            Int coeff = rng.uniform(-coeff_bound, coeff_bound);
            if (c == 0) {
                // torsion cannot map to a free coordinate
                canon(j, i) = (d == 0) ? coeff : 0;
            } else if (d == 0) {
                canon(j, i) = coeff;
            } else {
                Int step = c / gcd(c, d);
                canon(j, i) = coeff * step;
            }
        }
    }
    return GroupMorphism(g, h, h.coord_inv() * canon * g.coord());
}

}  // namespace defex
