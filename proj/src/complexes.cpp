#include "defex/complexes.hpp"

#include <algorithm>

namespace defex {

const PresentedGroup ChainComplex::zero_object_ = PresentedGroup::zero();

namespace {

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

ChainComplex ChainComplex::bounded(int lo, std::vector<PresentedGroup> objects,
                                   std::vector<GroupMorphism> differentials) {
    if (!objects.empty() && differentials.size() + 1 != objects.size())
        throw std::invalid_argument("ChainComplex: need one differential less than objects");
    for (std::size_t i = 0; i < differentials.size(); ++i)
        if (differentials[i].source() != objects[i] || differentials[i].target() != objects[i + 1])
            throw std::invalid_argument("ChainComplex: differential endpoints mismatch");
    // normalize: trim zero objects at the edges (their maps are zero)
    std::size_t a = 0, b = objects.size();
    while (a < b && objects[a].is_zero_object()) ++a;
    while (b > a && objects[b - 1].is_zero_object()) --b;
    ChainComplex c;
    c.periodic_ = false;
    if (a == b) {
        c.lo_ = 0;
        return c;
    }
    c.lo_ = lo + static_cast<int>(a);
    c.objects_.assign(objects.begin() + a, objects.begin() + b);
    c.differentials_.assign(differentials.begin() + a, differentials.begin() + (b - 1));
    return c;
}

ChainComplex ChainComplex::periodic(std::vector<PresentedGroup> objects,
                                    std::vector<GroupMorphism> differentials) {
    if (objects.empty() || objects.size() != differentials.size())
        throw std::invalid_argument("ChainComplex: periodic needs T objects and T differentials");
    const std::size_t t = objects.size();
    for (std::size_t r = 0; r < t; ++r)
        if (differentials[r].source() != objects[r] ||
            differentials[r].target() != objects[(r + 1) % t])
            throw std::invalid_argument("ChainComplex: periodic differential endpoints mismatch");
    ChainComplex c;
    c.periodic_ = true;
    c.objects_ = std::move(objects);
    c.differentials_ = std::move(differentials);
    return c;
}

ChainComplex ChainComplex::zero_complex() { return ChainComplex(); }

ChainComplex ChainComplex::stalk(int degree, const PresentedGroup& g) {
    return bounded(degree, {g}, {});
}

bool ChainComplex::is_zero_complex() const { return !periodic_ && objects_.empty(); }

const PresentedGroup& ChainComplex::object_at(int degree) const {
    if (periodic_) return objects_[floor_mod(degree, static_cast<int>(objects_.size()))];
    if (degree < lo_ || degree > hi()) return zero_object_;
    return objects_[degree - lo_];
}

GroupMorphism ChainComplex::differential_at(int degree) const {
    if (periodic_) return differentials_[floor_mod(degree, static_cast<int>(objects_.size()))];
    if (degree >= lo_ && degree < hi()) return differentials_[degree - lo_];
    return GroupMorphism::zero(object_at(degree), object_at(degree + 1));
}

bool validate(const ChainComplex& c) {
    if (c.is_zero_complex()) return true;
    if (c.is_periodic()) {
        const int t = static_cast<int>(c.period());
        for (int r = 0; r < t; ++r) {
            if (!is_well_defined(c.differential_at(r))) return false;
            if (!is_zero_morphism(compose(c.differential_at(r + 1), c.differential_at(r))))
                return false;
        }
        return true;
    }
    for (int i = c.lo() - 1; i <= c.hi(); ++i) {
        if (!is_well_defined(c.differential_at(i))) return false;
        if (!is_zero_morphism(compose(c.differential_at(i + 1), c.differential_at(i))))
            return false;
    }
    return true;
}

ChainComplex shift(const ChainComplex& c, int k) {
    if (c.is_zero_complex() || k == 0) return c;
    const bool flip = (k % 2) != 0;
    if (c.is_periodic()) {
        const int t = static_cast<int>(c.period());
        std::vector<PresentedGroup> objs;
        std::vector<GroupMorphism> diffs;
        for (int r = 0; r < t; ++r) {
            int src = floor_mod(r + k, t);
            objs.push_back(c.object_at(src));
            GroupMorphism d = c.differential_at(src);
            diffs.emplace_back(d.source(), d.target(), flip ? -d.matrix() : d.matrix());
        }
        return ChainComplex::periodic(std::move(objs), std::move(diffs));
    }
    std::vector<PresentedGroup> objs;
    std::vector<GroupMorphism> diffs;
    for (int n = c.lo() - k; n <= c.hi() - k; ++n) {
        objs.push_back(c.object_at(n + k));
        if (n < c.hi() - k) {
            GroupMorphism d = c.differential_at(n + k);
            diffs.emplace_back(d.source(), d.target(), flip ? -d.matrix() : d.matrix());
        }
    }
    return ChainComplex::bounded(c.lo() - k, std::move(objs), std::move(diffs));
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target,
                   std::map<int, GroupMorphism> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (source_.is_periodic() != target_.is_periodic())
        throw std::invalid_argument("ChainMap: incompatible supports");
    if (source_.is_periodic()) {
        if (source_.period() != target_.period())
            throw std::invalid_argument("ChainMap: periods differ");
        std::map<int, GroupMorphism> canon;
        for (int r = 0; r < static_cast<int>(source_.period()); ++r) {
            auto it = components_.find(r);
            if (it != components_.end())
                canon.emplace(r, it->second);
            else
                canon.emplace(r, GroupMorphism::zero(source_.object_at(r), target_.object_at(r)));
        }
        components_ = std::move(canon);
    }
    for (const auto& [deg, m] : components_) {
        if (m.source() != source_.object_at(deg) || m.target() != target_.object_at(deg))
            throw std::invalid_argument("ChainMap: component endpoints mismatch");
    }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::map<int, GroupMorphism> comps;
    if (c.is_periodic()) {
        for (int r = 0; r < static_cast<int>(c.period()); ++r)
            comps.emplace(r, GroupMorphism::identity(c.object_at(r)));
    } else {
        for (int n = c.lo(); n <= c.hi(); ++n)
            comps.emplace(n, GroupMorphism::identity(c.object_at(n)));
    }
    return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
    return ChainMap(source, target, {});
}

GroupMorphism ChainMap::component_at(int degree) const {
    if (source_.is_periodic()) degree = floor_mod(degree, static_cast<int>(source_.period()));
    auto it = components_.find(degree);
    if (it != components_.end()) return it->second;
    return GroupMorphism::zero(source_.object_at(degree), target_.object_at(degree));
}

bool is_chain_map(const ChainMap& f) {
    auto square = [&](int n) {
        return morphisms_equal(compose(f.target().differential_at(n), f.component_at(n)),
                               compose(f.component_at(n + 1), f.source().differential_at(n)));
    };
    if (f.source().is_periodic()) {
        for (int r = 0; r < static_cast<int>(f.source().period()); ++r) {
            if (!is_well_defined(f.component_at(r))) return false;
            if (!square(r)) return false;
        }
        return true;
    }
    int lo = std::min(f.source().lo(), f.target().lo()) - 1;
    int hi = std::max(f.source().hi(), f.target().hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
        if (!is_well_defined(f.component_at(n))) return false;
        if (!square(n)) return false;
    }
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::map<int, GroupMorphism> comps;
    if (f.source().is_periodic()) {
        for (int r = 0; r < static_cast<int>(f.source().period()); ++r)
            comps.emplace(r, compose(g.component_at(r), f.component_at(r)));
    } else {
        int lo = std::min(f.source().lo(), g.target().lo());
        int hi = std::max(f.source().hi(), g.target().hi());
        for (int n = lo; n <= hi; ++n)
            comps.emplace(n, compose(g.component_at(n), f.component_at(n)));
    }
    return ChainMap(f.source(), g.target(), std::move(comps));
}

ChainComplex cone(const ChainMap& f) {
    if (!is_chain_map(f)) throw std::invalid_argument("cone: not a chain map");
    const ChainComplex& a = f.source();
    const ChainComplex& b = f.target();

    auto cone_diff = [&](const PresentedGroup& cn, const PresentedGroup& cn1,
                         int n) -> GroupMorphism {
        IntMatrix m = IntMatrix::block2x2(
            -a.differential_at(n + 1).matrix(),
            IntMatrix(a.object_at(n + 2).generators(), b.object_at(n).generators()),
            f.component_at(n + 1).matrix(), b.differential_at(n).matrix());
        return GroupMorphism(cn, cn1, m);
    };

    if (a.is_periodic()) {
        const int t = static_cast<int>(a.period());
        std::vector<PresentedGroup> objs;
        for (int r = 0; r < t; ++r)
            objs.push_back(biproduct(a.object_at(r + 1), b.object_at(r)).object);
        std::vector<GroupMorphism> diffs;
        for (int r = 0; r < t; ++r)
            diffs.push_back(cone_diff(objs[r], objs[(r + 1) % t], r));
        return ChainComplex::periodic(std::move(objs), std::move(diffs));
    }

    if (a.is_zero_complex()) return b;
    if (b.is_zero_complex()) return shift(a, 1);
    int lo = std::min(a.lo() - 1, b.lo());
    int hi = std::max(a.hi() - 1, b.hi());
    std::vector<PresentedGroup> objs;
    for (int n = lo; n <= hi; ++n)
        objs.push_back(biproduct(a.object_at(n + 1), b.object_at(n)).object);
    std::vector<GroupMorphism> diffs;
    for (int n = lo; n < hi; ++n)
        diffs.push_back(cone_diff(objs[n - lo], objs[n - lo + 1], n));
    return ChainComplex::bounded(lo, std::move(objs), std::move(diffs));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.is_zero_complex()) return b;
    if (b.is_zero_complex()) return a;
    if (a.is_periodic() != b.is_periodic())
        throw std::invalid_argument("direct_sum: incompatible supports");
    if (a.is_periodic()) {
        if (a.period() != b.period()) throw std::invalid_argument("direct_sum: periods differ");
        const int t = static_cast<int>(a.period());
        std::vector<PresentedGroup> objs;
        for (int r = 0; r < t; ++r) objs.push_back(biproduct(a.object_at(r), b.object_at(r)).object);
        std::vector<GroupMorphism> diffs;
        for (int r = 0; r < t; ++r)
            diffs.emplace_back(objs[r], objs[(r + 1) % t],
                               IntMatrix::block_diag(a.differential_at(r).matrix(),
                                                     b.differential_at(r).matrix()));
        return ChainComplex::periodic(std::move(objs), std::move(diffs));
    }
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    std::vector<PresentedGroup> objs;
    std::vector<GroupMorphism> diffs;
    for (int n = lo; n <= hi; ++n) objs.push_back(biproduct(a.object_at(n), b.object_at(n)).object);
    for (int n = lo; n < hi; ++n)
        diffs.emplace_back(objs[n - lo], objs[n - lo + 1],
                           IntMatrix::block_diag(a.differential_at(n).matrix(),
                                                 b.differential_at(n).matrix()));
    return ChainComplex::bounded(lo, std::move(objs), std::move(diffs));
}

namespace {

std::optional<DegreeCertificate> certify_degree(
    const ChainComplex& c, const ConflationStructure& s, int i,
    const std::function<bool(const PresentedGroup&)>& relative_member) {
    GroupMorphism d = c.differential_at(i);
    GroupMorphism d_next = c.differential_at(i + 1);
    ImageFactorization fact = factorize(d);
    if (!is_deflation_in(s, fact.deflation)) return std::nullopt;
    if (!is_inflation_in(s, fact.inflation)) return std::nullopt;
    KernelData k = kernel(d_next);
    auto to_image = factor_through_mono(fact.inflation, k.inclusion);
    auto to_kernel = factor_through_mono(k.inclusion, fact.inflation);
    if (!to_image || !to_kernel) return std::nullopt;
    if (!morphisms_equal(compose(*to_image, *to_kernel), GroupMorphism::identity(fact.image)))
        return std::nullopt;
    if (!morphisms_equal(compose(*to_kernel, *to_image), GroupMorphism::identity(k.object)))
        return std::nullopt;
    DegreeCertificate cert{i, fact, k, *to_image, *to_kernel, fact.image.invariants(), true};
    if (relative_member) {
        cert.image_member = relative_member(fact.image);
        if (!cert.image_member) return std::nullopt;
        // kernel of the deflation must lie in the subcategory as well
        if (!relative_member(kernel(d).object)) return std::nullopt;
    }
    return cert;
}

}  // namespace

bool AcyclicityCertificate::replay(const ChainComplex& c) const {
    for (const auto& dc : degrees) {
        GroupMorphism d = c.differential_at(dc.degree);
        if (!morphisms_equal(compose(dc.factorization.inflation, dc.factorization.deflation), d))
            return false;
        if (!morphisms_equal(compose(dc.kernel_to_image, dc.image_to_kernel),
                             GroupMorphism::identity(dc.factorization.image)))
            return false;
        if (!morphisms_equal(compose(dc.image_to_kernel, dc.kernel_to_image),
                             GroupMorphism::identity(dc.next_kernel.object)))
            return false;
        if (dc.factorization.image.invariants() != dc.image_invariants) return false;
    }
    return true;
}

std::optional<AcyclicityCertificate> is_acyclic(
    const ChainComplex& c, const ConflationStructure& s,
    const std::function<bool(const PresentedGroup&)>& relative_member) {
    if (!validate(c)) return std::nullopt;
    AcyclicityCertificate cert;
    if (c.is_periodic()) {
        for (int r = 0; r < static_cast<int>(c.period()); ++r) {
            auto dc = certify_degree(c, s, r, relative_member);
            if (!dc) return std::nullopt;
            cert.degrees.push_back(std::move(*dc));
        }
        return cert;
    }
    if (c.is_zero_complex()) return cert;
    for (int i = c.lo() - 1; i <= c.hi(); ++i) {
        auto dc = certify_degree(c, s, i, relative_member);
        if (!dc) return std::nullopt;
        cert.degrees.push_back(std::move(*dc));
    }
    return cert;
}

QuasiIsoEvidence is_quasi_iso(const ChainMap& f, const ConflationStructure& s) {
    if (!validate(f.source()) || !validate(f.target()))
        throw std::invalid_argument("is_quasi_iso: inputs do not validate");
    if (!is_chain_map(f)) throw std::invalid_argument("is_quasi_iso: not a chain map");
    QuasiIsoEvidence ev;
    ev.cone_complex = cone(f);
    ev.cone_certificate = is_acyclic(ev.cone_complex, s);
    ev.holds = ev.cone_certificate.has_value();
    return ev;
}

std::vector<ConeImageConflations> cone_image_conflations(const ChainMap& f,
                                                         const ConflationStructure& s) {
    const ChainComplex& a = f.source();
    const ChainComplex& b = f.target();
    if (!is_acyclic(a, s) || !is_acyclic(b, s))
        throw std::invalid_argument("cone_image_conflations: inputs are not acyclic");
    ChainComplex cn = cone(f);

    std::vector<int> degrees;
    if (a.is_periodic()) {
        for (int r = 0; r < static_cast<int>(a.period()); ++r) degrees.push_back(r);
    } else {
        int lo = std::min(a.lo(), b.lo());
        int hi = std::max(a.hi(), b.hi()) + 1;
        for (int n = lo; n <= hi; ++n) degrees.push_back(n);
    }

    std::vector<ConeImageConflations> out;
    for (int n : degrees) {
        ImageFactorization im_a_prev = factorize(a.differential_at(n - 1));
        ImageFactorization im_b_prev = factorize(b.differential_at(n - 1));
        ImageFactorization im_a_n = factorize(a.differential_at(n));
        ImageFactorization im_b_n = factorize(b.differential_at(n));
        ImageFactorization im_cone_prev = factorize(cn.differential_at(n - 1));

        // im(d_A^(n-1)) >-> A^n + im(d_B^(n-1)) ->> im(d_cone^(n-1))
        BiproductData mid1 = biproduct(a.object_at(n), im_b_prev.image);
        GroupMorphism infl1(im_a_prev.image, mid1.object,
                            IntMatrix::vstack(a.differential_at(n - 1).matrix(),
                                              -f.component_at(n - 1).matrix()));
        GroupMorphism defl1(mid1.object, im_cone_prev.image,
                            IntMatrix::identity(mid1.object.generators()));
        Conflation c1{infl1, defl1};

        // im(d_cone^(n-1)) >-> B^n + im(d_A^n) ->> im(d_B^n)
        BiproductData mid2 = biproduct(b.object_at(n), im_a_n.image);
        const std::size_t ga = a.object_at(n).generators();
        const std::size_t gb_prev = b.object_at(n - 1).generators();
        IntMatrix infl2_m = IntMatrix::block2x2(
            f.component_at(n).matrix(), b.differential_at(n - 1).matrix(),
            -IntMatrix::identity(ga), IntMatrix(ga, gb_prev));
        GroupMorphism infl2(im_cone_prev.image, mid2.object, infl2_m);
        GroupMorphism defl2(mid2.object, im_b_n.image,
                            IntMatrix::hstack(IntMatrix::identity(b.object_at(n).generators()),
                                              f.component_at(n).matrix()));
        Conflation c2{infl2, defl2};

        if (!verify_conflation(s, c1) || !verify_conflation(s, c2))
            throw std::logic_error("cone_image_conflations: induced sequence failed to verify");
        out.push_back({n, c1, c2});
    }
    return out;
}

}  // namespace defex
