#pragma once

#include <cstdint>
#include <vector>

namespace instmod {

/// Spin^c class on the connected sum of q copies of CP^2: an integral
/// vector congruent to (1,...,1) mod 2 in the diagonal basis.
struct SpinCClass {
    std::vector<std::int64_t> c;

    explicit SpinCClass(std::vector<std::int64_t> entries);
    std::size_t q() const { return c.size(); }
};

/// Data of the coupled Dirac index formula:
/// ind = k + c1(E).(c1(E)+c)/2 + r (c.c - q)/8.
struct IndexProblem {
    int q = 0;
    std::int64_t k = 1;   // instanton charge, c2(E) = -k
    int r = 2;            // bundle rank
    std::vector<std::int64_t> c1E;  // zero vector for the SU(r) case
    SpinCClass c;

    IndexProblem(int q, std::int64_t k, int r, std::vector<std::int64_t> c1E, SpinCClass c);
};

/// Positive definite diagonal intersection pairing on H^2(X_q).
std::int64_t intersection(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v);

/// The 2^q Spin^c structures with c.c = q, i.e. all sign vectors.
std::vector<SpinCClass> enumerate_spinc(int q);

std::int64_t dirac_index(const IndexProblem& p);

/// The q+1 distinguished classes: c_0 = (1,...,1) and, for l = 1..q,
/// c_l = -e_l + sum_{i != l} e_i.
std::vector<SpinCClass> chosen_classes(int q);

/// Index of the Dirac operator coupled to the line bundle with Chern class
/// +-e_i: (1 +- c.e_i)/2, always 0 or 1. Slots are 1-based.
int coupled_line_index(const SpinCClass& c, int slot, int sign);

}  // namespace instmod
