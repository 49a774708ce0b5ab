#pragma once

#include "instmod/chern.hpp"
#include "instmod/hom.hpp"
#include "instmod/ideal.hpp"
#include "instmod/index.hpp"

#include <vector>

namespace instmod {

/// q-tuple J = (j_1,...,j_q) of nonnegative integers with |J| = sum j_i = k,
/// indexing the orbit Or(J). Lexicographic order is the canonical index order.
struct OrbitTuple {
    std::vector<int> j;

    int charge() const;
    std::size_t q() const { return j.size(); }

    friend bool operator==(const OrbitTuple&, const OrbitTuple&) = default;
    friend auto operator<=>(const OrbitTuple& a, const OrbitTuple& b) { return a.j <=> b.j; }
};

/// All orbit tuples in lexicographic order; count is binom(k+q-1, q-1).
std::vector<OrbitTuple> enumerate_orbits(int q, int k);

/// H*(Or(J)): generators c_n^{i+}, c_n^{i-} of degree 2n for each slot i
/// with j_i >= 1 and n = 1..j_i (c_n vanishes above the slot rank).
Ring orbit_ring(const OrbitTuple& J);

/// Z[C_1..C_k], the single-factor BU(k) presentation.
Ring single_bu_ring(int k);

/// Per-slot projection choice of Bpi_c: +1 when c.e_i = +1, -1 when -1,
/// 0 on slots with j_i = 0 (no factor present).
std::vector<int> pi_c_selection(const SpinCClass& c, const OrbitTuple& J);

/// Restriction of the classifying map to one orbit: Whitney sum after
/// Bpi_c, so the total class maps to the product of the selected per-slot
/// truncated total classes.
RingHom restriction_component(const SpinCClass& c, const OrbitTuple& J, int k);

/// Pullback along all q+1 chosen classes at once, on the unrebased source
/// Z[C_n^l]: component at J maps C_n^l via restriction_component(c_l, J).
RingHom f_star_source(int q, int k);

/// The same map in the rebased variables: C_n -> [prod_i c^{i+}]_{2n},
/// S_n^i -> [(c^{i+})^{-1} c^{i-}]_{2n} per component (zero when j_i = 0).
RingHom f_star(int q, int k);

/// Kernel generators of f* for k = 1 (products S_1^i S_1^j, i < j) and
/// k = 2 (the four relation families), in the rebased source ring.
IdealPresentation relation_ideal(int q, int k);

/// The k = 2 relation ideal: C_1 S_1^i S_1^j + S_1^i S_2^j + S_2^i S_1^j,
/// C_2 S_1^i S_1^j - S_2^i S_2^j, S_1^i S_1^j S_1^k, S_1^i S_1^j S_2^k,
/// over distinct indices, deduplicated by canonical form.
IdealPresentation t2_relation_ideal(int q);

struct RelationFailure {
    std::size_t generator;
    std::size_t component;
};

struct RelationsReport {
    bool all_zero = true;
    std::size_t generator_count = 0;
    std::vector<RelationFailure> failures;
};

/// Apply f* (k = 2) to every relation generator and demand the exact zero
/// tuple over the integers.
RelationsReport verify_relations_in_kernel(int q);

struct KernelDegreeReport {
    int d = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_ideal = 0;
    bool equal = false;
};

struct KernelReport {
    int q = 0;
    int k = 0;
    std::vector<KernelDegreeReport> degrees;
    bool all_equal = true;
    bool relations_in_kernel = true;
};

/// Degreewise comparison dim_Q ker(f*) vs dim_Q of the relation ideal for
/// every even degree d <= max_degree.
KernelReport kernel_equals_ideal(int q, int k, int max_degree);

/// Exact check of the syzygy identity
/// S_2^i f1 + S_1^i f2 = S_1^j ((S_2^i)^2 + C_1 S_1^i S_2^i + C_2 (S_1^i)^2)
/// between the first two relation families.
bool identity_check();

}  // namespace instmod
