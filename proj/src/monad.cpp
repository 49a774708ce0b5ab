#include "instmod/monad.hpp"

#include <cmath>
#include <stdexcept>

namespace instmod {

double RandomStream::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian()
{
    double u1 = uniform();
    while (u1 <= 0.0)
        u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::complex<double> RandomStream::cgaussian()
{
    const double re = gaussian();
    const double im = gaussian();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

CMat RandomStream::cgaussian_matrix(Eigen::Index rows, Eigen::Index cols)
{
    CMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            m(i, j) = cgaussian();
    return m;
}

MonadConfig MonadConfig::zero(int k, int r)
{
    MonadConfig cfg;
    cfg.k = k;
    cfg.r = r;
    cfg.a1 = CMat::Zero(k, k);
    cfg.a2 = CMat::Zero(k, k);
    cfg.d = CMat::Zero(k, k);
    cfg.b = CMat::Zero(k, r);
    cfg.c = CMat::Zero(r, k);
    return cfg;
}

void MonadConfig::validate() const
{
    if (k < 0 || r < 0)
        throw std::invalid_argument("MonadConfig: negative dimensions");
    auto shape = [](const CMat& m, int rows, int cols) {
        return m.rows() == rows && m.cols() == cols;
    };
    if (!shape(a1, k, k) || !shape(a2, k, k) || !shape(d, k, k) || !shape(b, k, r) || !shape(c, r, k))
        throw std::invalid_argument("MonadConfig: matrix shapes inconsistent with (k, r)");
    if (!a1.allFinite() || !a2.allFinite() || !d.allFinite() || !b.allFinite() || !c.allFinite())
        throw std::invalid_argument("MonadConfig: non-finite entries");
}

double GaugePair::condition() const
{
    Eigen::JacobiSVD<CMat> sg(g), sh(h);
    const double cg = sg.singularValues()(0) / sg.singularValues()(sg.singularValues().size() - 1);
    const double ch = sh.singularValues()(0) / sh.singularValues()(sh.singularValues().size() - 1);
    return std::max(cg, ch);
}

double BlowupPoint::incidence() const { return std::abs(s(0) * x(1) - s(1) * x(0)); }

void BlowupPoint::validate() const
{
    if (std::abs(x.norm() - 1.0) > 1e-9 || std::abs(s.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("BlowupPoint: coordinates must be unit-normalized");
    if (incidence() > 1e-12)
        throw std::invalid_argument("BlowupPoint: incidence s1 x2 = s2 x1 violated");
}

void SubspacePair::validate(double tol) const
{
    if (v1.rows() != v2.rows() || v1.cols() != v2.cols())
        throw std::invalid_argument("SubspacePair: frame shapes differ");
    const CMat id = CMat::Identity(v1.cols(), v1.cols());
    if ((v1.adjoint() * v1 - id).norm() > tol || (v2.adjoint() * v2 - id).norm() > tol)
        throw std::invalid_argument("SubspacePair: frames not orthonormal");
    if ((v2.adjoint() * v1).norm() > tol)
        throw std::invalid_argument("SubspacePair: V1 and V2 not orthogonal");
}

double integrability_residual(const MonadConfig& cfg)
{
    cfg.validate();
    if (cfg.k == 0)
        return 0.0;
    const CMat e = cfg.a1 * cfg.d * cfg.a2 - cfg.a2 * cfg.d * cfg.a1 + cfg.b * cfg.c;
    const double num = e.norm();
    double den = std::max({cfg.a1.norm(), cfg.a2.norm(), cfg.d.norm(), cfg.b.norm(), cfg.c.norm()});
    if (den == 0.0)
        return num;  // zero configuration: numerator is exactly zero too
    return num / den;
}

MonadConfig gauge_act(const GaugePair& p, const MonadConfig& cfg)
{
    cfg.validate();
    if (p.g.rows() != cfg.k || p.g.cols() != cfg.k || p.h.rows() != cfg.k || p.h.cols() != cfg.k)
        throw std::invalid_argument("gauge_act: gauge pair shape mismatch");
    Eigen::FullPivLU<CMat> lug(p.g), luh(p.h);
    if (cfg.k > 0 && (!lug.isInvertible() || !luh.isInvertible()))
        throw std::invalid_argument("gauge_act: singular gauge transformation");
    const CMat hinv = cfg.k > 0 ? CMat(luh.inverse()) : CMat::Zero(0, 0);
    const CMat ginv = cfg.k > 0 ? CMat(lug.inverse()) : CMat::Zero(0, 0);
    MonadConfig out = cfg;
    out.a1 = p.g * cfg.a1 * hinv;
    out.a2 = p.g * cfg.a2 * hinv;
    out.d = p.h * cfg.d * ginv;
    out.b = p.g * cfg.b;
    out.c = cfg.c * hinv;
    return out;
}

GaugePair gauge_compose(const GaugePair& outer, const GaugePair& inner)
{
    return GaugePair{outer.g * inner.g, outer.h * inner.h};
}

MonadConfig m0_config(const SubspacePair& sp)
{
    sp.validate();
    MonadConfig cfg = MonadConfig::zero(sp.k(), sp.r());
    cfg.c = sp.v1;            // im c = V1
    cfg.b = sp.v2.adjoint();  // (ker b)^perp = V2
    return cfg;
}

int numerical_rank(const CMat& m, double tol)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    Eigen::JacobiSVD<CMat> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0)
        return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0))
            ++rank;
    return rank;
}

namespace {

/// Orthonormal frame spanning the column space of m (expected rank k).
CMat column_frame(const CMat& m, int k)
{
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU);
    return svd.matrixU().leftCols(k);
}

}  // namespace

SubspacePair m0_subspaces(const MonadConfig& cfg, double tol)
{
    cfg.validate();
    const double scale = std::max(cfg.b.norm(), cfg.c.norm());
    if (cfg.a1.norm() > tol * scale || cfg.a2.norm() > tol * scale || cfg.d.norm() > tol * scale)
        throw std::invalid_argument("m0_subspaces: configuration has a or d nonzero");
    if (numerical_rank(cfg.c, tol) != cfg.k)
        throw std::invalid_argument("m0_subspaces: c is not injective (rank deficient)");
    if (numerical_rank(cfg.b, tol) != cfg.k)
        throw std::invalid_argument("m0_subspaces: b is not surjective (rank deficient)");
    if ((cfg.b * cfg.c).norm() > tol * scale * scale)
        throw std::invalid_argument("m0_subspaces: b c != 0");
    SubspacePair sp;
    sp.v1 = column_frame(cfg.c, cfg.k);
    sp.v2 = column_frame(cfg.b.adjoint(), cfg.k);
    sp.validate(1e-10);
    return sp;
}

double subspace_distance(const CMat& f1, const CMat& f2)
{
    return (f1 * f1.adjoint() - f2 * f2.adjoint()).norm();
}

std::pair<CMat, CMat> monad_maps(const MonadConfig& cfg, const BlowupPoint& pt)
{
    cfg.validate();
    pt.validate();
    const int k = cfg.k, r = cfg.r;
    const auto x1 = pt.x(0), x2 = pt.x(1), x3 = pt.x(2);
    const auto s1 = pt.s(0), s2 = pt.s(1);
    const CMat id = CMat::Identity(k, k);

    CMat a = CMat::Zero(4 * k + r, 2 * k);
    a.block(0 * k, k, k, k) = s1 * id;
    a.block(1 * k, 0, k, k) = x1 * id;
    a.block(2 * k, k, k, k) = s2 * id;
    a.block(3 * k, 0, k, k) = x2 * id;
    a.block(4 * k, 0, r, k) = cfg.c * x3;

    CMat b = CMat::Zero(2 * k, 4 * k + r);
    b.block(0, 0 * k, k, k) = x2 * id;
    b.block(0, 2 * k, k, k) = -x1 * id;
    b.block(0, 4 * k, k, r) = cfg.b * x3;
    b.block(k, 1 * k, k, k) = s2 * id;
    b.block(k, 3 * k, k, k) = -s1 * id;
    return {a, b};
}

ExactnessReport exactness_check(const MonadConfig& cfg, const std::vector<BlowupPoint>& points, double tol)
{
    ExactnessReport report;
    for (const BlowupPoint& pt : points) {
        const auto [a, b] = monad_maps(cfg, pt);
        ExactnessPoint pr;
        pr.rank_a = numerical_rank(a, tol);
        pr.rank_b = numerical_rank(b, tol);
        const double den = a.norm() * b.norm();
        pr.ba_rel_residual = den == 0.0 ? 0.0 : (b * a).norm() / den;
        pr.exact = pr.rank_a == 2 * cfg.k && pr.rank_b == 2 * cfg.k;
        report.all_exact = report.all_exact && pr.exact;
        report.points.push_back(pr);
    }
    return report;
}

DimensionReport m0_dimension_check(int k, int r, std::uint64_t seed)
{
    if (k < 1 || r <= 2 * k)
        throw std::invalid_argument("m0_dimension_check: need k >= 1 and r > 2k");
    RandomStream rng(seed);
    return m0_dimension_check(m0_config(random_subspace_pair(k, r, rng)));
}

DimensionReport m0_dimension_check(const MonadConfig& cfg)
{
    cfg.validate();
    const int k = cfg.k, r = cfg.r;
    if (k < 1 || r <= 2 * k)
        throw std::invalid_argument("m0_dimension_check: need k >= 1 and r > 2k");

    // linearized constraint  (db, dc) -> db c + b dc,  C^{2kr} -> C^{k^2}
    CMat lin = CMat::Zero(k * k, 2 * k * r);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int rho = 0; rho < r; ++rho) {
                lin(i * k + j, i * r + rho) += cfg.c(rho, j);
                lin(i * k + j, k * r + rho * k + j) += cfg.b(i, rho);
            }

    // infinitesimal gauge action  (gamma, eta) -> (gamma b, -c eta)
    CMat gauge = CMat::Zero(2 * k * r, 2 * k * k);
    for (int i = 0; i < k; ++i)
        for (int rho = 0; rho < r; ++rho)
            for (int l = 0; l < k; ++l)
                gauge(i * r + rho, i * k + l) = cfg.b(l, rho);
    for (int rho = 0; rho < r; ++rho)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                gauge(k * r + rho * k + j, k * k + l * k + j) = -cfg.c(rho, l);

    auto rank_with_gap = [](const CMat& m, double* gap) {
        Eigen::JacobiSVD<CMat> svd(m);
        const auto& sv = svd.singularValues();
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > 1e-8 * sv(0))
                ++rank;
        if (gap) {
            const double kept = rank > 0 ? sv(rank - 1) : 0.0;
            const double dropped = rank < sv.size() ? sv(rank) : 0.0;
            *gap = dropped == 0.0 ? 1e300 : kept / dropped;
        }
        return rank;
    };

    DimensionReport report;
    report.k = k;
    report.r = r;
    double gap1 = 0.0, gap2 = 0.0;
    report.rank_constraint = rank_with_gap(lin, &gap1);
    report.rank_gauge = rank_with_gap(gauge, &gap2);
    report.sigma_gap = std::min(gap1, gap2);
    report.measured = 2 * (2 * k * r - report.rank_constraint) - 2 * report.rank_gauge;
    report.expected = 4 * r * k - 6 * k * k;
    report.match = report.measured == report.expected;
    return report;
}

MonadConfig direct_sum(const MonadConfig& lhs, const MonadConfig& rhs)
{
    lhs.validate();
    rhs.validate();
    MonadConfig out = MonadConfig::zero(lhs.k + rhs.k, lhs.r + rhs.r);
    auto place = [&](CMat& dst, const CMat& a, const CMat& b) {
        dst.topLeftCorner(a.rows(), a.cols()) = a;
        dst.bottomRightCorner(b.rows(), b.cols()) = b;
    };
    place(out.a1, lhs.a1, rhs.a1);
    place(out.a2, lhs.a2, rhs.a2);
    place(out.d, lhs.d, rhs.d);
    place(out.b, lhs.b, rhs.b);
    place(out.c, lhs.c, rhs.c);
    return out;
}

std::vector<BlowupPoint> sample_blowup_points(int n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("sample_blowup_points: n >= 1 required");
    RandomStream rng(seed);
    std::vector<BlowupPoint> out;

    auto normalized2 = [](Eigen::Vector2cd v) { return Eigen::Vector2cd(v / v.norm()); };

    // line at infinity: x3 = 0, s parallel to (x1, x2)
    {
        BlowupPoint pt;
        Eigen::Vector2cd plane(rng.cgaussian(), rng.cgaussian());
        plane = normalized2(plane);
        pt.x << plane(0), plane(1), 0.0;
        pt.s = plane;
        pt.validate();
        out.push_back(pt);
    }
    // exceptional line: x1 = x2 = 0, free (s1 : s2)
    {
        BlowupPoint pt;
        pt.x << 0.0, 0.0, 1.0;
        pt.s = normalized2(Eigen::Vector2cd(rng.cgaussian(), rng.cgaussian()));
        pt.validate();
        out.push_back(pt);
    }
    while (static_cast<int>(out.size()) < n + 2) {
        Eigen::Vector3cd x(rng.cgaussian(), rng.cgaussian(), rng.cgaussian());
        x /= x.norm();
        Eigen::Vector2cd plane(x(0), x(1));
        if (plane.norm() < 1e-6)
            continue;
        BlowupPoint pt;
        pt.x = x;
        pt.s = normalized2(plane);
        pt.validate();
        out.push_back(pt);
    }
    return out;
}

SubspacePair random_subspace_pair(int k, int r, RandomStream& rng)
{
    if (r < 2 * k)
        throw std::invalid_argument("random_subspace_pair: r >= 2k required");
    const CMat m = rng.cgaussian_matrix(r, 2 * k);
    Eigen::HouseholderQR<CMat> qr(m);
    const CMat q = CMat(qr.householderQ()).leftCols(2 * k);
    SubspacePair sp;
    sp.v1 = q.leftCols(k);
    sp.v2 = q.rightCols(k);
    return sp;
}

GaugePair random_unitary_pair(int k, RandomStream& rng)
{
    auto unitary = [&]() {
        Eigen::HouseholderQR<CMat> qr(rng.cgaussian_matrix(k, k));
        return CMat(CMat(qr.householderQ()).leftCols(k));
    };
    return GaugePair{unitary(), unitary()};
}

}  // namespace instmod
