#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "defex/fgab.hpp"
#include "defex/sampling.hpp"

namespace defex {

/// A kernel-cokernel pair singled out by a conflation structure.
struct Conflation {
    GroupMorphism inflation;  // X >-> Y
    GroupMorphism deflation;  // Y ->> Z
};

/// Ambient abelian check: inflation mono, deflation epi, composite zero,
/// image of the inflation equals the kernel of the deflation.
bool is_kernel_cokernel_pair(const Conflation& c);

/// A conflation structure: an object class plus a decision procedure for
/// which kernel-cokernel pairs count as conflations. Closed under
/// isomorphism of pairs by construction (all predicates are
/// isomorphism-invariant).
struct ConflationStructure {
    std::string name;
    std::function<bool(const PresentedGroup&)> contains_object;
    /// Extra admission test beyond kernel-cokernel-pair + object membership.
    std::function<bool(const Conflation&)> admits_extra;
    SampleProfile profile;
    /// Registered closure metadata: R0-R3+ hold by a characterization
    /// (abelian ambient, or inheritance along a deflation-closed
    /// subcategory); sampling then only corroborates.
    bool axioms_proved = false;
    std::string proved_note;
};

ConflationStructure fgab_structure();
/// Abelian subcategory of groups annihilated by n, with all its short
/// exact sequences (realizes modules over Z/n).
ConflationStructure killed_by_structure(const Int& n);
/// Negative control: drops conflations with zero cokernel term, so R0
/// fails on every nonzero object.
ConflationStructure broken_demo_structure();

bool verify_conflation(const ConflationStructure& s, const Conflation& c);
bool is_deflation_in(const ConflationStructure& s, const GroupMorphism& f);
bool is_inflation_in(const ConflationStructure& s, const GroupMorphism& f);

/// Commuting square whose horizontal arrows are deflations.
struct DeflationSquare {
    GroupMorphism top;     // p': Y' ->> Z'
    GroupMorphism bottom;  // p: Y ->> Z
    GroupMorphism left;    // f: Y' -> Y
    GroupMorphism right;   // g: Z' -> Z
};

bool square_commutes(const DeflationSquare& sq);
bool is_pullback_square(const DeflationSquare& sq);
bool is_pushout_square(const DeflationSquare& sq);

/// The induced sequence Y' >-> Y + Z' ->> Z of a pullback square of
/// deflations, verified to be a conflation in s. Throws on non-commuting
/// or non-pullback squares.
Conflation bicartesian_conflation(const ConflationStructure& s, const DeflationSquare& sq);

enum class AxiomId { R0, R1, R2, R3, R3Plus };
enum class AxiomStatus { Proved, CertifiedOnSample, Counterexample };

const char* axiom_name(AxiomId a);
const char* axiom_status_name(AxiomStatus s);

struct AxiomResult {
    AxiomId axiom;
    AxiomStatus status;
    std::size_t samples = 0;
    std::string witness;  // JSON; empty unless a counterexample was found
};

struct AxiomReport {
    std::string structure;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::vector<AxiomResult> results;
    bool all_hold() const;
};

/// Sample-based certification of R0-R3+. Counterexamples are found
/// smallest-first (sampling ramps instance sizes up), so emitted witnesses
/// are already minimal-ish; single-object witnesses are shrunk further.
AxiomReport check_axioms(const ConflationStructure& s, std::size_t budget, std::uint64_t seed);

/// Dual axiom L1 by formal arrow reversal (composition of inflations);
/// negative-control use only.
AxiomResult check_axiom_l1(const ConflationStructure& s, std::size_t budget, std::uint64_t seed);

/// Structure-aware samplers, shared with the property suites.
PresentedGroup sample_object(const ConflationStructure& s, Rng& rng, std::size_t max_factors = 4);
std::optional<GroupMorphism> sample_deflation(const ConflationStructure& s, Rng& rng,
                                              std::size_t max_factors = 4);
std::optional<Conflation> sample_conflation(const ConflationStructure& s, Rng& rng,
                                            std::size_t max_factors = 4);

}  // namespace defex
