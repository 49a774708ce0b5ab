#pragma once

#include "instmod/poly.hpp"

#include <vector>

namespace instmod {

/// Direct sum of component rings (cohomology of a disjoint union).
/// Elements are tuples holding one polynomial per component.
struct TupleRing {
    std::vector<Ring> components;

    std::size_t size() const { return components.size(); }
};

using Tuple = std::vector<GradedPolynomial>;

bool tuple_is_zero(const Tuple& t);

/// Degree-preserving ring homomorphism from a source presentation into a
/// single ring or a tuple of rings, given by generator images. Application
/// extends multiplicatively and additively.
class RingHom {
public:
    static RingHom to_ring(Ring source, Ring target, std::vector<GradedPolynomial> images);
    static RingHom to_tuple(Ring source, TupleRing target, std::vector<Tuple> images);

    const Ring& source() const { return source_; }
    const TupleRing& target() const { return target_; }
    bool single() const { return single_; }
    Ring single_target() const;

    /// Image of the i-th source generator.
    const Tuple& image(std::size_t i) const { return images_.at(i); }

    Tuple apply(const GradedPolynomial& p) const;
    GradedPolynomial apply_single(const GradedPolynomial& p) const;

    /// Image of a source monomial in one target component.
    GradedPolynomial apply_monomial(const Monomial& mono, std::size_t component) const;

private:
    RingHom() = default;
    void validate() const;

    Ring source_;
    TupleRing target_;
    std::vector<Tuple> images_;  // per source generator, per component
    bool single_ = false;
};

/// g after f; both must be single-target with matching middle ring.
RingHom hom_compose(const RingHom& g, const RingHom& f);

RingHom identity_hom(const Ring& ring);

/// Basis of the degree-d kernel over Q, returned as primitive
/// integer-coefficient polynomials in the source ring.
std::vector<GradedPolynomial> kernel_degree(const RingHom& h, int d);

std::size_t kernel_degree_dim(const RingHom& h, int d);

}  // namespace instmod
