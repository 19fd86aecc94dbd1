#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defex/int_matrix.hpp"

namespace defex {

/// Finitely generated abelian group given by a presentation: g generators,
/// relation matrix whose rows are relators. The canonical coordinate data
/// (Smith form of the relation lattice) is computed eagerly; objects are
/// immutable values afterwards.
class PresentedGroup {
public:
    PresentedGroup() : PresentedGroup(0, IntMatrix(0, 0)) {}
    PresentedGroup(std::size_t generators, IntMatrix relations);

    static PresentedGroup zero() { return PresentedGroup(); }
    static PresentedGroup free_group(std::size_t rank);
    static PresentedGroup cyclic(const Int& n);  // Z/n, n = 0 gives Z
    static PresentedGroup from_invariants(const std::vector<Int>& factors);

    std::size_t generators() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }
    /// Relation lattice generators as columns (relations transposed).
    IntMatrix relation_columns() const { return relations_.transposed(); }

    /// Invariant factors: nontrivial torsion in divisibility order, then a
    /// zero for each free rank. Complete isomorphism invariant.
    const std::vector<Int>& invariants() const { return invariants_; }
    /// Diagonal of the relation-lattice Smith form, padded to length g
    /// (1 = trivial coordinate, 0 = free coordinate).
    const std::vector<Int>& torsion_diagonal() const { return torsion_; }
    /// Change of basis w = C x taking the relation lattice to diagonal form.
    const IntMatrix& coord() const { return coord_; }
    const IntMatrix& coord_inv() const { return coord_inv_; }

    bool is_zero_object() const { return invariants_.empty(); }
    bool is_finite() const;
    Int order() const;  // 0 when infinite

    /// Does the column vector (or every column) lie in the relation lattice?
    bool lattice_contains(const IntMatrix& cols) const;

    bool operator==(const PresentedGroup& o) const {
        return generators_ == o.generators_ && relations_ == o.relations_;
    }
    bool operator!=(const PresentedGroup& o) const { return !(*this == o); }

    std::string invariants_string() const;

private:
    std::size_t generators_;
    IntMatrix relations_;
    std::vector<Int> torsion_;
    std::vector<Int> invariants_;
    IntMatrix coord_, coord_inv_;
};

/// normalize: canonical form of a presented group (invariant factor list).
inline const std::vector<Int>& normalize(const PresentedGroup& g) { return g.invariants(); }

/// Same isomorphism class (equal invariant factors).
bool isomorphic(const PresentedGroup& a, const PresentedGroup& b);

/// Morphism of presented groups: the matrix sends source generators to
/// target generator coordinates (columns = images, composition = product).
class GroupMorphism {
public:
    GroupMorphism(PresentedGroup source, PresentedGroup target, IntMatrix matrix);

    static GroupMorphism identity(const PresentedGroup& g);
    static GroupMorphism zero(const PresentedGroup& source, const PresentedGroup& target);

    const PresentedGroup& source() const { return source_; }
    const PresentedGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    PresentedGroup source_, target_;
    IntMatrix matrix_;
};

/// Image of every source relator lies in the target relation lattice.
bool is_well_defined(const GroupMorphism& f);

/// g after f. Requires f.target and g.source to be the same presentation.
GroupMorphism compose(const GroupMorphism& g, const GroupMorphism& f);

/// Equality of induced maps: the difference sends generators into the
/// target relation lattice. Presentations must match.
bool morphisms_equal(const GroupMorphism& f, const GroupMorphism& g);
bool is_zero_morphism(const GroupMorphism& f);

bool is_mono(const GroupMorphism& f);
bool is_epi(const GroupMorphism& f);
bool is_iso(const GroupMorphism& f);

struct KernelData {
    PresentedGroup object;
    GroupMorphism inclusion;  // object -> source(f)
};
KernelData kernel(const GroupMorphism& f);

struct CokernelData {
    PresentedGroup object;
    GroupMorphism projection;  // target(f) -> object
};
CokernelData cokernel(const GroupMorphism& f);

/// Deflation-inflation factorization through the image. The image is
/// presented on the source generators (deflation matrix = identity) with
/// relations pulled back, so induced maps on images keep their matrices.
struct ImageFactorization {
    PresentedGroup image;
    GroupMorphism deflation;  // source -> image
    GroupMorphism inflation;  // image -> target
};
ImageFactorization factorize(const GroupMorphism& f);

struct PullbackData {
    PresentedGroup object;
    GroupMorphism to_left;   // P -> X  (along f: X -> Z)
    GroupMorphism to_right;  // P -> Y  (along g: Y -> Z)
};
PullbackData pullback(const GroupMorphism& f, const GroupMorphism& g);

/// Universal map into a pullback: u with to_left*u = t1, to_right*u = t2.
/// Requires f*t1 = g*t2; the result is unique since (to_left, to_right) is
/// jointly monic.
GroupMorphism pullback_induce(const PullbackData& pb, const GroupMorphism& t1,
                              const GroupMorphism& t2);

struct BiproductData {
    PresentedGroup object;
    GroupMorphism inject_left, inject_right;  // X -> X+Y, Y -> X+Y
    GroupMorphism project_left, project_right;
};
BiproductData biproduct(const PresentedGroup& x, const PresentedGroup& y);

struct PushoutData {
    PresentedGroup object;  // (Y + Z) / <(f, -g)>
    GroupMorphism from_left, from_right;
};
PushoutData pushout(const GroupMorphism& f, const GroupMorphism& g);  // f: X->Y, g: X->Z

/// Universal map out of a pushout: u with u*from_left = t1, u*from_right = t2.
GroupMorphism pushout_induce(const PushoutData& po, const GroupMorphism& t1,
                             const GroupMorphism& t2);

/// Two-sided inverse of an isomorphism.
GroupMorphism inverse_iso(const GroupMorphism& f);

/// Does G contain an element of exact order n (n >= 1)?
bool element_order_test(const PresentedGroup& g, const Int& n);

/// Factor t through a mono j (t = j*u); nullopt when t does not land in
/// the image of j.
std::optional<GroupMorphism> factor_through_mono(const GroupMorphism& j, const GroupMorphism& t);

/// Factor t through an epi q (t = u*q); nullopt when t does not kill
/// ker q. Sources of t and q must coincide.
std::optional<GroupMorphism> factor_through_epi(const GroupMorphism& q, const GroupMorphism& t);

/// Isomorphic copy with a minimal diagonal presentation, plus the
/// connecting isomorphisms. Constructions that would otherwise grow
/// presentations (kernels, pullbacks) return simplified objects.
struct SimplifiedGroup {
    PresentedGroup group;
    GroupMorphism to_original;    // group -> original
    GroupMorphism from_original;  // original -> group
};
SimplifiedGroup simplify(const PresentedGroup& g);

}  // namespace defex
