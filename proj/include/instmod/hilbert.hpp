#pragma once

#include "instmod/ideal.hpp"
#include "instmod/poly.hpp"

#include <concepts>
#include <vector>

namespace instmod {

/// Graded ranks: entry t is the dimension in degree 2t, up to degree D.
struct HilbertVector {
    std::vector<Int> dims;

    int max_degree() const { return 2 * (static_cast<int>(dims.size()) - 1); }
    const Int& at_degree(int d) const;

    friend bool operator==(const HilbertVector&, const HilbertVector&) = default;
};

HilbertVector operator+(const HilbertVector& a, const HilbertVector& b);
HilbertVector operator-(const HilbertVector& a, const HilbertVector& b);
HilbertVector scaled(const Int& scalar, const HilbertVector& v);

/// Constrained so overload resolution never probes foreign types against
/// the arbitrary-precision constructor.
template <class T>
    requires std::same_as<std::remove_cvref_t<T>, Int>
HilbertVector operator*(const T& scalar, const HilbertVector& v)
{
    return scaled(scalar, v);
}

/// Coefficients of prod_gens 1/(1 - t^{deg/2}) through degree D.
HilbertVector hilbert_free(const Ring& ring, int max_degree);

/// dim(ring_d) - rank(ideal piece) per degree.
HilbertVector hilbert_quotient(const IdealPresentation& ideal, int max_degree);

struct HilbertDegreeReport {
    int d = 0;
    Int lhs = 0;
    Int rhs = 0;
    bool equal = false;
};

struct HilbertReport {
    int q = 0;
    int max_degree = 0;
    bool all_equal = true;
    std::vector<HilbertDegreeReport> per_degree;
};

/// Cross-validate the charge-2 quotient presentation against the
/// direct-sum decomposition
///   Z[a1,a2] (+) q copies of <k1,k2> (+) C(q,2) copies of <x1 x2>,
/// degreewise through max_degree.
HilbertReport t43_check(int q, int max_degree);

}  // namespace instmod
