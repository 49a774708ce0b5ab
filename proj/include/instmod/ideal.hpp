#pragma once

#include "instmod/poly.hpp"

#include <optional>
#include <vector>

namespace instmod {

/// Homogeneous ideal given by generators of positive degree.
struct IdealPresentation {
    Ring ring;
    std::vector<GradedPolynomial> generators;

    IdealPresentation(Ring r, std::vector<GradedPolynomial> gens);
};

/// Row-reduced basis of span{ m * g : deg(m * g) = d }.
std::vector<GradedPolynomial> ideal_degree_basis(const IdealPresentation& ideal, int d);

/// Rank of the degree-d piece via sparse elimination; equals the size of
/// ideal_degree_basis(ideal, d) without materializing it.
std::size_t ideal_degree_rank(const IdealPresentation& ideal, int d);

enum class MembershipMode { rational, integral };

/// Certificate scale * p = sum_i cofactor_i * generator_i. The scale is 1
/// in integral mode and a positive integer in rational mode.
struct MembershipCertificate {
    Int scale = 1;
    std::vector<GradedPolynomial> cofactors;  // one per ideal generator
};

struct MembershipResult {
    bool member = false;
    std::optional<MembershipCertificate> certificate;
};

/// Decide p in I degreewise. Rational mode solves over Q; integral mode
/// finds an integer certificate by Hermite-style lattice elimination.
MembershipResult membership(const GradedPolynomial& p, const IdealPresentation& ideal,
                            MembershipMode mode = MembershipMode::rational);

}  // namespace instmod
