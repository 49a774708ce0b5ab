#pragma once

#include "instmod/hom.hpp"
#include "instmod/poly.hpp"

#include <vector>

namespace instmod {

/// Every relation of interest lives in degree <= 8; one extra
/// multiplication level fits comfortably under this bound.
inline constexpr int kDefaultTruncation = 16;

/// Truncated total characteristic class 1 + u_1 + u_2 + ... with the
/// degree-2n piece stored separately; truncation order is 2N.
class TotalClass {
public:
    explicit TotalClass(Ring ring, int trunc = kDefaultTruncation);

    static TotalClass one(Ring ring, int trunc = kDefaultTruncation);
    /// 1 + p for a homogeneous positive-degree p (or a general polynomial,
    /// split into graded pieces).
    static TotalClass one_plus(const GradedPolynomial& p, int trunc = kDefaultTruncation);

    const Ring& ring() const { return ring_; }
    int truncation() const { return trunc_; }
    /// Degree-2n piece (zero polynomial when absent or beyond truncation).
    const GradedPolynomial& component(int n) const;
    void set_component(int n, GradedPolynomial p);

    bool is_one() const;

    friend bool operator==(const TotalClass&, const TotalClass&);

private:
    Ring ring_;
    int trunc_;  // 2N
    std::vector<GradedPolynomial> comps_;
    GradedPolynomial zero_;  // returned for components beyond the truncation
};

TotalClass series_mul(const TotalClass& u, const TotalClass& v);

/// Multiplicative inverse up to truncation; requires unit degree-0 part.
TotalClass series_inverse(const TotalClass& u);

/// H*(prod_{l=0..q} BU(k)) = Z[C_n^l], degrees 2n, n = 1..k.
Ring product_bu_ring(int q, int k);

/// Rebased presentation Z[C_n, S_n^i], n = 1..k, i = 1..q.
Ring rebased_source_ring(int q, int k);

/// The invertible change of variables C = C^0, S^i = (C^0)^{-1} C^i.
/// forward: Z[C_n^l] -> Z[C_n, S_n^i]; backward is its inverse.
struct ChangeOfVariables {
    RingHom forward;
    RingHom backward;
};

ChangeOfVariables change_of_variables(int q, int k);

}  // namespace instmod
