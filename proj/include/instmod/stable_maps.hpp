#pragma once

#include "instmod/hom.hpp"
#include "instmod/poly.hpp"

#include <vector>

namespace instmod {

/// H_*(Or(A_inf)) = Z[x_m^{i+}, x_m^{i-}], 1 <= i <= q, m <= M, deg 2m.
Ring loop_ring(int q, int m_max);

/// H_*(prod_{l=0..q} BU) = Z[X_m^l], truncated at m <= M.
Ring stable_target_ring(int q, int m_max);

/// The homology-level map: x_m^{i+} -> (sum_l X_m^l) - X_m^i,
/// x_m^{i-} -> X_m^i.
RingHom f_lower_star(int q, int m_max);

struct PreimageCertificate {
    GenName target;         // the generator X_m^l being hit
    GradedPolynomial preimage;  // element of the loop ring mapping onto it
};

struct SurjectivityReport {
    int q = 0;
    int m_max = 0;
    bool surjective = false;
    /// Per degree 2m: Smith invariant factors of the generator matrix are
    /// all 1 (trivial cokernel over Z).
    std::vector<bool> cokernel_trivial;  // index m-1
    std::vector<PreimageCertificate> certificates;
};

/// Verify every X_m^l has an integer preimage, returning explicit
/// certificates, and confirm the degreewise cokernel vanishes over Z.
SurjectivityReport surjectivity_check(int q, int m_max);

}  // namespace instmod
