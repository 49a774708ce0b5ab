#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace instmod {

using CMat = Eigen::MatrixXcd;

/// Deterministic random stream; the double/complex draws are generated
/// from raw mt19937_64 bits (not library distributions), so identical
/// seeds reproduce identical values bit for bit.
class RandomStream {
public:
    static constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

    explicit RandomStream(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    double uniform();  // [0, 1)
    double gaussian();  // Box-Muller
    std::complex<double> cgaussian();
    CMat cgaussian_matrix(Eigen::Index rows, Eigen::Index cols);

private:
    std::mt19937_64 engine_;
};

/// Monad data (a1, a2, d, b, c) for charge k and rank r:
/// a1, a2 : U -> W, d : W -> U (k x k), b : C^r -> W (k x r),
/// c : U -> C^r (r x k).
struct MonadConfig {
    int k = 0;
    int r = 0;
    CMat a1, a2, d, b, c;

    static MonadConfig zero(int k, int r);
    static MonadConfig empty() { return zero(0, 0); }

    void validate() const;
};

/// (g, h) in Aut(W) x Aut(U); both must be invertible.
struct GaugePair {
    CMat g, h;

    double condition() const;
};

/// Point of the blown-up plane: homogeneous (x1 : x2 : x3) and section
/// coordinates (s1, s2) with the incidence s1 x2 = s2 x1; both unit vectors.
struct BlowupPoint {
    Eigen::Vector3cd x;
    Eigen::Vector2cd s;

    double incidence() const;  // |s1 x2 - s2 x1|
    void validate() const;
};

/// Orthonormal k-frames V1, V2 in C^r with V1 perpendicular to V2.
struct SubspacePair {
    CMat v1, v2;  // r x k, orthonormal columns

    int k() const { return static_cast<int>(v1.cols()); }
    int r() const { return static_cast<int>(v1.rows()); }
    void validate(double tol = 1e-12) const;
};

/// Frobenius norm of a1 d a2 - a2 d a1 + b c over the largest operand norm.
double integrability_residual(const MonadConfig& cfg);

/// (g a1 h^-1, g a2 h^-1, h d g^-1, g b, c h^-1).
MonadConfig gauge_act(const GaugePair& p, const MonadConfig& cfg);

GaugePair gauge_compose(const GaugePair& outer, const GaugePair& inner);

/// The configuration (0,0,0,b,c) with im c = V1 and (ker b)^perp = V2;
/// b c = 0 by orthogonality.
MonadConfig m0_config(const SubspacePair& sp);

/// Recover (V1, V2) from a configuration with a = d = 0; requires b
/// surjective, c injective and b c ~ 0.
SubspacePair m0_subspaces(const MonadConfig& cfg, double tol = 1e-8);

/// || P_V - P_W ||_F between the projectors of two frames.
double subspace_distance(const CMat& f1, const CMat& f2);

/// The monad sequence matrices at a point: A is (4k+r) x 2k, B is
/// 2k x (4k+r), with B A = [[b c x3^2, 0], [0, 0]] under the incidence.
std::pair<CMat, CMat> monad_maps(const MonadConfig& cfg, const BlowupPoint& pt);

struct ExactnessPoint {
    double ba_rel_residual = 0.0;
    int rank_a = 0;
    int rank_b = 0;
    bool exact = false;
};

struct ExactnessReport {
    bool all_exact = true;
    std::vector<ExactnessPoint> points;
};

/// Pointwise nondegeneracy: A injective and B surjective (numerical rank
/// 2k via singular values with threshold tol * sigma_max).
ExactnessReport exactness_check(const MonadConfig& cfg, const std::vector<BlowupPoint>& points, double tol = 1e-8);

struct DimensionReport {
    int k = 0;
    int r = 0;
    int rank_constraint = 0;  // expected k^2
    int rank_gauge = 0;       // expected 2 k^2
    int measured = 0;
    int expected = 0;
    bool match = false;
    double sigma_gap = 0.0;  // smallest kept / largest dropped singular value ratio
};

/// Real dimension of M_0 measured at a random point:
/// 2 (2kr - rank of the linearized constraint) - 2 (gauge orbit rank),
/// compared against 4rk - 6k^2. Requires r > 2k.
DimensionReport m0_dimension_check(int k, int r, std::uint64_t seed = RandomStream::kDefaultSeed);

/// Same measurement at a given configuration with a = d = 0.
DimensionReport m0_dimension_check(const MonadConfig& cfg);

/// Block direct sum; charge and rank add.
MonadConfig direct_sum(const MonadConfig& lhs, const MonadConfig& rhs);

/// n pseudo-random incident points plus the two distinguished loci
/// (a point on the line at infinity x3 = 0 and one on the exceptional
/// line x1 = x2 = 0), always included first.
std::vector<BlowupPoint> sample_blowup_points(int n, std::uint64_t seed = RandomStream::kDefaultSeed);

SubspacePair random_subspace_pair(int k, int r, RandomStream& rng);
GaugePair random_unitary_pair(int k, RandomStream& rng);

int numerical_rank(const CMat& m, double tol = 1e-8);

}  // namespace instmod
