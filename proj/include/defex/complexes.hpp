#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "defex/conflation.hpp"
#include "defex/fgab.hpp"

namespace defex {

/// Cochain complex of presented groups; differentials raise degree by 1.
/// Support is either a finite window [lo, hi] (zero objects outside) or
/// periodic with period T (degree classes mod T), which stands in for the
/// genuinely unbounded regime.
class ChainComplex {
public:
    /// Bounded complex: objects for degrees lo..lo+objects.size()-1,
    /// differentials[i]: degree lo+i -> lo+i+1 (one fewer than objects).
    static ChainComplex bounded(int lo, std::vector<PresentedGroup> objects,
                                std::vector<GroupMorphism> differentials);
    /// Periodic complex: objects[r] sits in degrees r mod T,
    /// differentials[r]: class r -> class r+1 mod T.
    static ChainComplex periodic(std::vector<PresentedGroup> objects,
                                 std::vector<GroupMorphism> differentials);
    static ChainComplex zero_complex();
    static ChainComplex stalk(int degree, const PresentedGroup& g);

    bool is_periodic() const { return periodic_; }
    std::size_t period() const { return objects_.size(); }
    /// Bounded support window (empty complex: lo > hi).
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }
    bool is_zero_complex() const;

    const PresentedGroup& object_at(int degree) const;
    GroupMorphism differential_at(int degree) const;

private:
    bool periodic_ = false;
    int lo_ = 0;
    std::vector<PresentedGroup> objects_;
    std::vector<GroupMorphism> differentials_;
    static const PresentedGroup zero_object_;
};

/// All differentials well-defined and d(i+1) o d(i) = 0 throughout.
bool validate(const ChainComplex& c);

/// Degree shift: shift(c, k)^n = c^(n+k), differential (-1)^k d.
ChainComplex shift(const ChainComplex& c, int k);

/// Chain map; components stored per degree (bounded) or per degree class
/// (periodic, equal periods required).
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target,
             std::map<int, GroupMorphism> components);
    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    GroupMorphism component_at(int degree) const;

private:
    ChainComplex source_, target_;
    std::map<int, GroupMorphism> components_;
};

bool is_chain_map(const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// cone(f)^n = source^(n+1) + target^n with the usual differential.
ChainComplex cone(const ChainMap& f);

/// Degreewise direct sum (supports must be compatible).
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Per-degree witness that the differential is admissible with
/// ker(d^(i+1)) isomorphic to im(d^i); the isomorphism is carried
/// explicitly and replays by morphism equality.
struct DegreeCertificate {
    int degree;
    ImageFactorization factorization;    // d^i = inflation o deflation
    KernelData next_kernel;              // ker(d^(i+1))
    GroupMorphism kernel_to_image;       // mutually inverse pair
    GroupMorphism image_to_kernel;
    std::vector<Int> image_invariants;
    bool image_member = true;            // subcategory evidence (relative case)
};

struct AcyclicityCertificate {
    std::vector<DegreeCertificate> degrees;
    bool replay(const ChainComplex& c) const;
};

/// Certificate iff the complex is acyclic for structure s; with
/// `relative_member` set, the images (and kernels) must additionally
/// satisfy the membership predicate. Periodic complexes are checked over
/// one period.
std::optional<AcyclicityCertificate> is_acyclic(
    const ChainComplex& c, const ConflationStructure& s,
    const std::function<bool(const PresentedGroup&)>& relative_member = nullptr);

struct QuasiIsoEvidence {
    bool holds = false;
    ChainComplex cone_complex;
    std::optional<AcyclicityCertificate> cone_certificate;
};
QuasiIsoEvidence is_quasi_iso(const ChainMap& f, const ConflationStructure& s);

/// The two per-degree conflations attached to the cone of a map between
/// acyclic complexes:
///   im(d_A^(n-1)) >-> A^n + im(d_B^(n-1)) ->> im(d_cone^(n-1))
///   im(d_cone^(n-1)) >-> B^n + im(d_A^n)  ->> im(d_B^n)
struct ConeImageConflations {
    int degree;
    Conflation first;
    Conflation second;
};
std::vector<ConeImageConflations> cone_image_conflations(const ChainMap& f,
                                                         const ConflationStructure& s);

}  // namespace defex
