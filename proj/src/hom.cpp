#include "instmod/hom.hpp"

#include "instmod/linalg.hpp"

#include <map>
#include <stdexcept>

namespace instmod {

bool tuple_is_zero(const Tuple& t)
{
    for (const GradedPolynomial& p : t)
        if (!p.is_zero())
            return false;
    return true;
}

RingHom RingHom::to_ring(Ring source, Ring target, std::vector<GradedPolynomial> images)
{
    RingHom h;
    h.source_ = std::move(source);
    h.target_.components = {std::move(target)};
    h.single_ = true;
    h.images_.reserve(images.size());
    for (GradedPolynomial& p : images)
        h.images_.push_back({std::move(p)});
    h.validate();
    return h;
}

RingHom RingHom::to_tuple(Ring source, TupleRing target, std::vector<Tuple> images)
{
    RingHom h;
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    h.images_ = std::move(images);
    h.single_ = false;
    h.validate();
    return h;
}

void RingHom::validate() const
{
    if (images_.size() != source_->size())
        throw std::invalid_argument("RingHom: one image required per source generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].size() != target_.size())
            throw std::invalid_argument("RingHom: image tuple arity mismatch");
        const int d = source_->gen(i).degree;
        for (std::size_t j = 0; j < target_.size(); ++j) {
            const GradedPolynomial& p = images_[i][j];
            if (!same_ring(p.ring(), target_.components[j]))
                throw std::invalid_argument("RingHom: image lives in the wrong component ring");
            if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != d))
                throw std::invalid_argument("RingHom: generator image must be homogeneous of equal degree");
        }
    }
}

Ring RingHom::single_target() const
{
    if (!single_)
        throw std::logic_error("RingHom: tuple-valued homomorphism has no single target");
    return target_.components[0];
}

GradedPolynomial RingHom::apply_monomial(const Monomial& mono, std::size_t component) const
{
    GradedPolynomial out = GradedPolynomial::constant(target_.components[component], 1);
    for (std::size_t i = 0; i < mono.exps.size(); ++i)
        if (mono.exps[i] > 0)
            out = out * images_[i][component].pow(mono.exps[i]);
    return out;
}

Tuple RingHom::apply(const GradedPolynomial& p) const
{
    if (!same_ring(p.ring(), source_))
        throw std::invalid_argument("RingHom: polynomial not in the source ring");
    Tuple out;
    out.reserve(target_.size());
    for (std::size_t j = 0; j < target_.size(); ++j) {
        GradedPolynomial acc = GradedPolynomial::zero(target_.components[j]);
        for (const auto& [mono, coef] : p.terms())
            acc += apply_monomial(mono, j) * coef;
        out.push_back(std::move(acc));
    }
    return out;
}

GradedPolynomial RingHom::apply_single(const GradedPolynomial& p) const
{
    if (!single_)
        throw std::logic_error("RingHom: tuple-valued homomorphism; use apply()");
    return apply(p)[0];
}

RingHom hom_compose(const RingHom& g, const RingHom& f)
{
    if (!f.single())
        throw std::invalid_argument("hom_compose: inner homomorphism must be single-target");
    if (!same_ring(f.single_target(), g.source()))
        throw std::invalid_argument("hom_compose: middle ring mismatch");
    if (g.single()) {
        std::vector<GradedPolynomial> images;
        images.reserve(f.source()->size());
        for (std::size_t i = 0; i < f.source()->size(); ++i)
            images.push_back(g.apply_single(f.image(i)[0]));
        return RingHom::to_ring(f.source(), g.single_target(), std::move(images));
    }
    std::vector<Tuple> images;
    images.reserve(f.source()->size());
    for (std::size_t i = 0; i < f.source()->size(); ++i)
        images.push_back(g.apply(f.image(i)[0]));
    return RingHom::to_tuple(f.source(), g.target(), std::move(images));
}

RingHom identity_hom(const Ring& ring)
{
    std::vector<GradedPolynomial> images;
    images.reserve(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i)
        images.push_back(GradedPolynomial::generator(ring, i));
    return RingHom::to_ring(ring, ring, std::move(images));
}

namespace {

/// Coordinate columns of the degree-d piece of the target tuple:
/// monomial bases per component laid out consecutively.
struct TargetCoords {
    std::vector<std::vector<Monomial>> bases;
    std::vector<std::map<Monomial, std::size_t, GradedLexLess>> index;
    std::vector<std::size_t> offset;
    std::size_t total = 0;
};

TargetCoords target_coords(const TupleRing& target, int d)
{
    TargetCoords tc;
    for (const Ring& comp : target.components) {
        tc.offset.push_back(tc.total);
        tc.bases.push_back(monomial_basis(comp, d));
        std::map<Monomial, std::size_t, GradedLexLess> idx{GradedLexLess{comp.get()}};
        for (std::size_t i = 0; i < tc.bases.back().size(); ++i)
            idx.emplace(tc.bases.back()[i], i);
        tc.index.push_back(std::move(idx));
        tc.total += tc.bases.back().size();
    }
    return tc;
}

IntMat image_matrix(const RingHom& h, const std::vector<Monomial>& source_basis, const TargetCoords& tc)
{
    IntMat rows(source_basis.size(), std::vector<Int>(tc.total, 0));
    for (std::size_t r = 0; r < source_basis.size(); ++r) {
        for (std::size_t j = 0; j < h.target().size(); ++j) {
            const GradedPolynomial img = h.apply_monomial(source_basis[r], j);
            for (const auto& [mono, coef] : img.terms()) {
                auto it = tc.index[j].find(mono);
                if (it == tc.index[j].end())
                    throw std::logic_error("kernel_degree: image escapes the expected degree piece");
                rows[r][tc.offset[j] + it->second] = coef;
            }
        }
    }
    return rows;
}

}  // namespace

std::vector<GradedPolynomial> kernel_degree(const RingHom& h, int d)
{
    std::vector<GradedPolynomial> out;
    const std::vector<Monomial> basis = monomial_basis(h.source(), d);
    if (basis.empty())
        return out;
    const TargetCoords tc = target_coords(h.target(), d);

    // kernel vectors v with sum_r v_r * image(basis_r) = 0: null space of
    // the transpose of the image matrix
    const IntMat rows = image_matrix(h, basis, tc);
    IntMat at(tc.total, std::vector<Int>(basis.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < tc.total; ++c)
            at[c][r] = rows[r][c];
    if (at.empty()) {
        // zero-dimensional target piece: everything maps to zero
        for (const Monomial& m : basis)
            out.push_back(GradedPolynomial::term(h.source(), m, 1));
        return out;
    }
    for (const std::vector<Int>& v : nullspace_int(at)) {
        GradedPolynomial p = GradedPolynomial::zero(h.source());
        for (std::size_t r = 0; r < basis.size(); ++r)
            p.add_term(basis[r], v[r]);
        out.push_back(std::move(p));
    }
    return out;
}

std::size_t kernel_degree_dim(const RingHom& h, int d)
{
    const std::vector<Monomial> basis = monomial_basis(h.source(), d);
    if (basis.empty())
        return 0;
    const TargetCoords tc = target_coords(h.target(), d);
    if (tc.total == 0)
        return basis.size();
    IntMat rows = image_matrix(h, basis, tc);
    return basis.size() - rref_int(rows);
}

}  // namespace instmod
