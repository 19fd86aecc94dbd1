#include "defex/fgab.hpp"

#include <algorithm>
#include <sstream>

namespace defex {

PresentedGroup::PresentedGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
    if (relations_.cols() != generators_)
        throw std::invalid_argument("PresentedGroup: relation width != generator count");
    SmithDecomposition s = smith_normal_form(relations_.transposed());
    coord_ = s.u;
    coord_inv_ = s.u_inv;
    torsion_.assign(generators_, Int(0));
    const std::size_t nmin = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < nmin; ++i) torsion_[i] = s.d(i, i);
    for (const Int& d : torsion_)
        if (d != 1) invariants_.push_back(d);
}

PresentedGroup PresentedGroup::free_group(std::size_t rank) {
    return PresentedGroup(rank, IntMatrix(0, rank));
}

PresentedGroup PresentedGroup::cyclic(const Int& n) {
    if (n == 0) return free_group(1);
    IntMatrix rel(1, 1);
    rel(0, 0) = n;
    return PresentedGroup(1, rel);
}

PresentedGroup PresentedGroup::from_invariants(const std::vector<Int>& factors) {
    std::size_t g = factors.size();
    std::size_t torsion = 0;
    for (const Int& f : factors)
        if (f != 0) ++torsion;
    IntMatrix rel(torsion, g);
    std::size_t r = 0;
    for (std::size_t i = 0; i < g; ++i)
        if (factors[i] != 0) rel(r++, i) = factors[i];
    return PresentedGroup(g, rel);
}

bool PresentedGroup::is_finite() const {
    return std::all_of(invariants_.begin(), invariants_.end(),
                       [](const Int& d) { return d != 0; });
}

Int PresentedGroup::order() const {
    if (!is_finite()) return 0;
    Int n = 1;
    for (const Int& d : invariants_) n *= d;
    return n;
}

bool PresentedGroup::lattice_contains(const IntMatrix& cols) const {
    if (cols.rows() != generators_)
        throw std::invalid_argument("lattice_contains: wrong ambient rank");
    IntMatrix w = coord_ * cols;
    for (std::size_t i = 0; i < generators_; ++i) {
        const Int& d = torsion_[i];
        for (std::size_t j = 0; j < cols.cols(); ++j) {
            if (d == 0) {
                if (w(i, j) != 0) return false;
            } else if (w(i, j) % d != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string PresentedGroup::invariants_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < invariants_.size(); ++i)
        os << (i ? "," : "") << invariants_[i];
    os << "]";
    return os.str();
}

bool isomorphic(const PresentedGroup& a, const PresentedGroup& b) {
    return a.invariants() == b.invariants();
}

GroupMorphism::GroupMorphism(PresentedGroup source, PresentedGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
        throw std::invalid_argument("GroupMorphism: matrix shape does not match objects");
}

GroupMorphism GroupMorphism::identity(const PresentedGroup& g) {
    return GroupMorphism(g, g, IntMatrix::identity(g.generators()));
}

GroupMorphism GroupMorphism::zero(const PresentedGroup& source, const PresentedGroup& target) {
    return GroupMorphism(source, target, IntMatrix(target.generators(), source.generators()));
}

bool is_well_defined(const GroupMorphism& f) {
    return f.target().lattice_contains(f.matrix() * f.source().relation_columns());
}

GroupMorphism compose(const GroupMorphism& g, const GroupMorphism& f) {
    if (g.source() != f.target())
        throw std::invalid_argument("compose: middle presentations differ");
    return GroupMorphism(f.source(), g.target(), g.matrix() * f.matrix());
}

bool morphisms_equal(const GroupMorphism& f, const GroupMorphism& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw std::invalid_argument("morphisms_equal: presentations differ");
    return f.target().lattice_contains(f.matrix() - g.matrix());
}

bool is_zero_morphism(const GroupMorphism& f) {
    return f.target().lattice_contains(f.matrix());
}

namespace {

// Generators (as columns) of the preimage lattice {x : M x in L_target}.
IntMatrix preimage_lattice(const IntMatrix& m, const PresentedGroup& target) {
    IntMatrix b = IntMatrix::hstack(m, target.relation_columns());
    return kernel_basis(b).top_rows(m.cols());
}

}  // namespace

bool is_mono(const GroupMorphism& f) {
    IntMatrix pre = preimage_lattice(f.matrix(), f.target());
    return f.source().lattice_contains(pre);
}

bool is_epi(const GroupMorphism& f) {
    IntMatrix rel = IntMatrix::vstack(f.target().relations(), f.matrix().transposed());
    return PresentedGroup(f.target().generators(), rel).is_zero_object();
}

bool is_iso(const GroupMorphism& f) { return is_mono(f) && is_epi(f); }

KernelData kernel(const GroupMorphism& f) {
    if (!is_well_defined(f)) throw std::invalid_argument("kernel: ill-defined morphism");
    IntMatrix pmat = preimage_lattice(f.matrix(), f.target());
    IntMatrix rel =
        IntMatrix::hstack(pmat, f.source().relation_columns());
    IntMatrix krel = kernel_basis(rel).top_rows(pmat.cols()).transposed();
    PresentedGroup raw(pmat.cols(), krel);
    GroupMorphism incl(raw, f.source(), pmat);
    SimplifiedGroup s = simplify(raw);
    return {s.group, compose(incl, s.to_original)};
}

CokernelData cokernel(const GroupMorphism& f) {
    if (!is_well_defined(f)) throw std::invalid_argument("cokernel: ill-defined morphism");
    IntMatrix rel = IntMatrix::vstack(f.target().relations(), f.matrix().transposed());
    PresentedGroup obj(f.target().generators(), rel);
    GroupMorphism proj(f.target(), obj, IntMatrix::identity(f.target().generators()));
    return {obj, proj};
}

ImageFactorization factorize(const GroupMorphism& f) {
    if (!is_well_defined(f)) throw std::invalid_argument("factorize: ill-defined morphism");
    IntMatrix pmat = preimage_lattice(f.matrix(), f.target());
    PresentedGroup image(f.source().generators(), pmat.transposed());
    GroupMorphism defl(f.source(), image, IntMatrix::identity(f.source().generators()));
    GroupMorphism infl(image, f.target(), f.matrix());
    return {image, defl, infl};
}

PullbackData pullback(const GroupMorphism& f, const GroupMorphism& g) {
    if (f.target() != g.target())
        throw std::invalid_argument("pullback: targets differ");
    const std::size_t gx = f.source().generators();
    const std::size_t gy = g.source().generators();
    IntMatrix b = IntMatrix::hstack(IntMatrix::hstack(f.matrix(), -g.matrix()),
                                    f.target().relation_columns());
    IntMatrix qmat = kernel_basis(b).top_rows(gx + gy);
    IntMatrix rel_lat = IntMatrix::block_diag(f.source().relation_columns(),
                                              g.source().relation_columns());
    IntMatrix krel = kernel_basis(IntMatrix::hstack(qmat, rel_lat)).top_rows(qmat.cols());
    PresentedGroup raw(qmat.cols(), krel.transposed());
    GroupMorphism p1(raw, f.source(), qmat.top_rows(gx));
    GroupMorphism p2(raw, g.source(), qmat.bottom_rows(gy));
    SimplifiedGroup s = simplify(raw);
    return {s.group, compose(p1, s.to_original), compose(p2, s.to_original)};
}

GroupMorphism pullback_induce(const PullbackData& pb, const GroupMorphism& t1,
                              const GroupMorphism& t2) {
    if (t1.source() != t2.source())
        throw std::invalid_argument("pullback_induce: test maps have different sources");
    IntMatrix joint = IntMatrix::vstack(pb.to_left.matrix(), pb.to_right.matrix());
    IntMatrix rel_lat = IntMatrix::block_diag(pb.to_left.target().relation_columns(),
                                              pb.to_right.target().relation_columns());
    IntMatrix rhs = IntMatrix::vstack(t1.matrix(), t2.matrix());
    auto z = solve_integer(IntMatrix::hstack(joint, rel_lat), rhs);
    if (!z) throw std::invalid_argument("pullback_induce: cone does not factor");
    GroupMorphism u(t1.source(), pb.object, z->top_rows(pb.object.generators()));
    if (!is_well_defined(u) || !morphisms_equal(compose(pb.to_left, u), t1) ||
        !morphisms_equal(compose(pb.to_right, u), t2))
        throw std::invalid_argument("pullback_induce: factorization check failed");
    return u;
}

BiproductData biproduct(const PresentedGroup& x, const PresentedGroup& y) {
    const std::size_t gx = x.generators(), gy = y.generators();
    PresentedGroup obj(gx + gy, IntMatrix::block_diag(x.relations(), y.relations()));
    IntMatrix ix = IntMatrix::vstack(IntMatrix::identity(gx), IntMatrix(gy, gx));
    IntMatrix iy = IntMatrix::vstack(IntMatrix(gx, gy), IntMatrix::identity(gy));
    IntMatrix px = IntMatrix::hstack(IntMatrix::identity(gx), IntMatrix(gx, gy));
    IntMatrix py = IntMatrix::hstack(IntMatrix(gy, gx), IntMatrix::identity(gy));
    return {obj, GroupMorphism(x, obj, ix), GroupMorphism(y, obj, iy),
            GroupMorphism(obj, x, px), GroupMorphism(obj, y, py)};
}

PushoutData pushout(const GroupMorphism& f, const GroupMorphism& g) {
    if (f.source() != g.source())
        throw std::invalid_argument("pushout: sources differ");
    const std::size_t gy = f.target().generators(), gz = g.target().generators();
    IntMatrix glue = IntMatrix::hstack(f.matrix().transposed(), (-g.matrix()).transposed());
    IntMatrix rel = IntMatrix::vstack(
        IntMatrix::block_diag(f.target().relations(), g.target().relations()), glue);
    PresentedGroup obj(gy + gz, rel);
    IntMatrix iy = IntMatrix::vstack(IntMatrix::identity(gy), IntMatrix(gz, gy));
    IntMatrix iz = IntMatrix::vstack(IntMatrix(gy, gz), IntMatrix::identity(gz));
    return {obj, GroupMorphism(f.target(), obj, iy), GroupMorphism(g.target(), obj, iz)};
}

GroupMorphism pushout_induce(const PushoutData& po, const GroupMorphism& t1,
                             const GroupMorphism& t2) {
    if (t1.target() != t2.target())
        throw std::invalid_argument("pushout_induce: test maps have different targets");
    GroupMorphism u(po.object, t1.target(), IntMatrix::hstack(t1.matrix(), t2.matrix()));
    if (!is_well_defined(u) || !morphisms_equal(compose(u, po.from_left), t1) ||
        !morphisms_equal(compose(u, po.from_right), t2))
        throw std::invalid_argument("pushout_induce: cocone does not factor");
    return u;
}

GroupMorphism inverse_iso(const GroupMorphism& f) {
    auto inv = factor_through_epi(f, GroupMorphism::identity(f.source()));
    if (!inv || !morphisms_equal(compose(f, *inv), GroupMorphism::identity(f.target())))
        throw std::invalid_argument("inverse_iso: morphism is not an isomorphism");
    return *inv;
}

bool element_order_test(const PresentedGroup& g, const Int& n) {
    if (n <= 0) throw std::invalid_argument("element_order_test: n must be >= 1");
    if (n == 1) return true;
    Int largest = 0;
    for (const Int& d : g.invariants())
        if (d != 0) largest = d;  // invariant factors are in divisibility order
    if (largest == 0) return false;
    return largest % n == 0;
}

std::optional<GroupMorphism> factor_through_mono(const GroupMorphism& j,
                                                 const GroupMorphism& t) {
    if (j.target() != t.target())
        throw std::invalid_argument("factor_through_mono: targets differ");
    auto z = solve_integer(IntMatrix::hstack(j.matrix(), j.target().relation_columns()),
                           t.matrix());
    if (!z) return std::nullopt;
    GroupMorphism u(t.source(), j.source(), z->top_rows(j.source().generators()));
    if (!is_well_defined(u) || !morphisms_equal(compose(j, u), t)) return std::nullopt;
    return u;
}

std::optional<GroupMorphism> factor_through_epi(const GroupMorphism& q,
                                                const GroupMorphism& t) {
    if (q.source() != t.source())
        throw std::invalid_argument("factor_through_epi: sources differ");
    // preimages under q of the generators of its target
    auto z = solve_integer(IntMatrix::hstack(q.matrix(), q.target().relation_columns()),
                           IntMatrix::identity(q.target().generators()));
    if (!z) return std::nullopt;
    IntMatrix pre = z->top_rows(q.source().generators());
    GroupMorphism u(q.target(), t.target(), t.matrix() * pre);
    if (!is_well_defined(u) || !morphisms_equal(compose(u, q), t)) return std::nullopt;
    return u;
}

SimplifiedGroup simplify(const PresentedGroup& g) {
    const auto& torsion = g.torsion_diagonal();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < torsion.size(); ++i)
        if (torsion[i] != 1) keep.push_back(i);
    PresentedGroup small = PresentedGroup::from_invariants(g.invariants());
    IntMatrix to(g.generators(), keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k)
        for (std::size_t i = 0; i < g.generators(); ++i)
            to(i, k) = g.coord_inv()(i, keep[k]);
    IntMatrix from(keep.size(), g.generators());
    for (std::size_t k = 0; k < keep.size(); ++k)
        for (std::size_t j = 0; j < g.generators(); ++j)
            from(k, j) = g.coord()(keep[k], j);
    return {small, GroupMorphism(small, g, to), GroupMorphism(g, small, from)};
}

}  // namespace defex
