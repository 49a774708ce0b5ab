#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instmod/monad.hpp"
#include "instmod/poly.hpp"
#include "oracles.hpp"

using namespace instmod;

namespace {

MonadConfig random_config(int k, int r, RandomStream& rng)
{
    MonadConfig cfg = MonadConfig::zero(k, r);
    cfg.a1 = rng.cgaussian_matrix(k, k);
    cfg.a2 = rng.cgaussian_matrix(k, k);
    cfg.d = rng.cgaussian_matrix(k, k);
    cfg.b = rng.cgaussian_matrix(k, r);
    cfg.c = rng.cgaussian_matrix(r, k);
    return cfg;
}

}  // namespace

TEST_CASE("integrability residual")
{
    CHECK(integrability_residual(MonadConfig::zero(2, 5)) == 0.0);

    RandomStream rng(1);
    const SubspacePair sp = random_subspace_pair(2, 6, rng);
    CHECK(integrability_residual(m0_config(sp)) <= 1e-14);

    MonadConfig bad = MonadConfig::zero(2, 5);
    bad.b = rng.cgaussian_matrix(2, 5);
    bad.c = rng.cgaussian_matrix(5, 2);
    CHECK(integrability_residual(bad) > 1e-3);
}

TEST_CASE("gauge action")
{
    RandomStream rng(2);
    const MonadConfig cfg = random_config(2, 5, rng);

    const GaugePair id{CMat::Identity(2, 2), CMat::Identity(2, 2)};
    const MonadConfig same = gauge_act(id, cfg);
    CHECK((same.a1 - cfg.a1).norm() == 0.0);
    CHECK((same.c - cfg.c).norm() == 0.0);

    // composition law
    for (int trial = 0; trial < 20; ++trial) {
        const GaugePair p1{rng.cgaussian_matrix(2, 2) + 3.0 * CMat::Identity(2, 2),
                           rng.cgaussian_matrix(2, 2) + 3.0 * CMat::Identity(2, 2)};
        const GaugePair p2{rng.cgaussian_matrix(2, 2) + 3.0 * CMat::Identity(2, 2),
                           rng.cgaussian_matrix(2, 2) + 3.0 * CMat::Identity(2, 2)};
        const MonadConfig two_steps = gauge_act(p2, gauge_act(p1, cfg));
        const MonadConfig one_step = gauge_act(gauge_compose(p2, p1), cfg);
        const double scale = std::max(1.0, one_step.a1.norm());
        CHECK((two_steps.a1 - one_step.a1).norm() / scale <= 1e-12);
        CHECK((two_steps.d - one_step.d).norm() / scale <= 1e-12);
        CHECK((two_steps.b - one_step.b).norm() / scale <= 1e-12);
        CHECK((two_steps.c - one_step.c).norm() / scale <= 1e-12);
    }

    // unitary pairs preserve the zero set of the residual
    const SubspacePair sp = random_subspace_pair(2, 6, rng);
    const MonadConfig m0 = m0_config(sp);
    for (int trial = 0; trial < 20; ++trial) {
        const GaugePair u = random_unitary_pair(2, rng);
        CHECK(integrability_residual(gauge_act(u, m0)) <= 1e-12);
    }

    const GaugePair singular{CMat::Zero(2, 2), CMat::Identity(2, 2)};
    CHECK_THROWS_AS(gauge_act(singular, cfg), std::invalid_argument);
}

TEST_CASE("m0 construction and recovery")
{
    // r=3, k=1, V1 = span(e1), V2 = span(e2)
    SubspacePair sp;
    sp.v1 = CMat::Zero(3, 1);
    sp.v1(0, 0) = 1.0;
    sp.v2 = CMat::Zero(3, 1);
    sp.v2(1, 0) = 1.0;
    const MonadConfig cfg = m0_config(sp);
    CHECK(cfg.c(0, 0) == std::complex<double>(1.0, 0.0));
    CHECK(cfg.b(0, 1) == std::complex<double>(1.0, 0.0));
    CHECK((cfg.b * cfg.c).norm() == 0.0);

    RandomStream rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const SubspacePair pair = random_subspace_pair(3, 8, rng);
        const MonadConfig m0 = m0_config(pair);
        CHECK(integrability_residual(m0) <= 1e-14);

        const SubspacePair back = m0_subspaces(m0);
        CHECK(subspace_distance(back.v1, pair.v1) <= 1e-10);
        CHECK(subspace_distance(back.v2, pair.v2) <= 1e-10);

        // the recovered planes are gauge invariants
        const GaugePair g{rng.cgaussian_matrix(3, 3) + 3.0 * CMat::Identity(3, 3),
                          rng.cgaussian_matrix(3, 3) + 3.0 * CMat::Identity(3, 3)};
        const SubspacePair after = m0_subspaces(gauge_act(g, m0));
        CHECK(subspace_distance(after.v1, pair.v1) <= 1e-9);
        CHECK(subspace_distance(after.v2, pair.v2) <= 1e-9);
    }

    MonadConfig bad = MonadConfig::zero(1, 3);
    bad.b = CMat::Ones(1, 3);
    bad.c = CMat::Ones(3, 1);
    CHECK_THROWS_AS(m0_subspaces(bad), std::invalid_argument);
}

TEST_CASE("monad maps and the B A identity")
{
    RandomStream rng(4);
    const SubspacePair sp = random_subspace_pair(2, 6, rng);
    const MonadConfig cfg = m0_config(sp);

    // x3 = 0 kills B A regardless of b c
    MonadConfig arbitrary = random_config(2, 6, rng);
    arbitrary.a1.setZero();
    arbitrary.a2.setZero();
    arbitrary.d.setZero();
    BlowupPoint at_infinity;
    at_infinity.x << M_SQRT1_2, M_SQRT1_2, 0.0;
    at_infinity.s << M_SQRT1_2, M_SQRT1_2;
    const auto [ai, bi] = monad_maps(arbitrary, at_infinity);
    CHECK((bi * ai).norm() <= 1e-14 * ai.norm() * bi.norm());

    // 100 incident points, both distinguished loci included
    const auto points = sample_blowup_points(100);
    CHECK(points.size() == 102);
    CHECK(std::abs(points[0].x(2)) == 0.0);
    CHECK(points[1].x(0) == std::complex<double>(0.0, 0.0));
    for (const BlowupPoint& pt : points) {
        CHECK(pt.incidence() <= 1e-14);
        const auto [a, b] = monad_maps(cfg, pt);
        CHECK((b * a).norm() / (a.norm() * b.norm()) <= 1e-12);
    }
}

TEST_CASE("B A block identity on indeterminate entries")
{
    // entries of b, c and the point coordinates as polynomial generators;
    // the product B A must equal [[b c x3^2, 0], [0, 0]] modulo the
    // incidence s1 x2 - s2 x1 in the off-diagonal blocks
    for (const auto& [k, r] : {std::pair<int, int>{1, 2}, std::pair<int, int>{2, 3}}) {
        std::vector<GeneratorSpec> gens;
        for (int i = 1; i <= k; ++i)
            for (int rho = 1; rho <= r; ++rho)
                gens.push_back(gen_spec("b", i, Superscript::bare(rho), 2));
        for (int rho = 1; rho <= r; ++rho)
            for (int i = 1; i <= k; ++i)
                gens.push_back(gen_spec("c", rho, Superscript::bare(i), 2));
        gens.push_back(gen_spec("x", 1, 2));
        gens.push_back(gen_spec("x", 2, 2));
        gens.push_back(gen_spec("x", 3, 2));
        gens.push_back(gen_spec("s", 1, 2));
        gens.push_back(gen_spec("s", 2, 2));
        const Ring ring = make_ring(std::move(gens));

        auto g = [&](const std::string& family, int sub, int sup) {
            return GradedPolynomial::generator(ring, GenName{family, sub, Superscript::bare(sup)});
        };
        auto scalar = [&](const std::string& family, int sub) {
            return GradedPolynomial::generator(ring, GenName{family, sub, Superscript::none()});
        };
        const GradedPolynomial x1 = scalar("x", 1), x2 = scalar("x", 2), x3 = scalar("x", 3);
        const GradedPolynomial s1 = scalar("s", 1), s2 = scalar("s", 2);
        const GradedPolynomial zero = GradedPolynomial::zero(ring);

        using PolyMat = std::vector<std::vector<GradedPolynomial>>;
        auto zeros = [&](int rows, int cols) { return PolyMat(rows, std::vector<GradedPolynomial>(cols, zero)); };

        PolyMat a = zeros(4 * k + r, 2 * k);
        PolyMat b = zeros(2 * k, 4 * k + r);
        for (int i = 0; i < k; ++i) {
            a[0 * k + i][k + i] = s1;
            a[1 * k + i][i] = x1;
            a[2 * k + i][k + i] = s2;
            a[3 * k + i][i] = x2;
            b[i][0 * k + i] = x2;
            b[i][2 * k + i] = -x1;
            b[k + i][1 * k + i] = s2;
            b[k + i][3 * k + i] = -s1;
        }
        for (int rho = 0; rho < r; ++rho)
            for (int i = 0; i < k; ++i) {
                a[4 * k + rho][i] = g("c", rho + 1, i + 1) * x3;
                b[i][4 * k + rho] = g("b", i + 1, rho + 1) * x3;
            }

        PolyMat ba = zeros(2 * k, 2 * k);
        for (int i = 0; i < 2 * k; ++i)
            for (int j = 0; j < 2 * k; ++j)
                for (int l = 0; l < 4 * k + r; ++l)
                    ba[i][j] += b[i][l] * a[l][j];

        const GradedPolynomial incidence = x2 * s1 - x1 * s2;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                GradedPolynomial bc = zero;  // (b c)_{ij}
                for (int rho = 1; rho <= r; ++rho)
                    bc += g("b", i + 1, rho) * g("c", rho, j + 1);
                CHECK(ba[i][j] == bc * x3 * x3);
                CHECK(ba[i][k + j] == (i == j ? incidence : zero));
                CHECK(ba[k + i][j] == (i == j ? -incidence : zero));
                CHECK(ba[k + i][k + j] == zero);
            }
    }
}

TEST_CASE("exactness")
{
    RandomStream rng(5);
    const MonadConfig cfg = m0_config(random_subspace_pair(1, 3, rng));
    const auto points = sample_blowup_points(20);
    const ExactnessReport report = exactness_check(cfg, points);
    CHECK(report.all_exact);
    for (const auto& pt : report.points) {
        CHECK(pt.rank_a == 2);
        CHECK(pt.rank_b == 2);
    }

    // b = 0 degenerates exactly on the exceptional line
    MonadConfig nob = cfg;
    nob.b.setZero();
    const ExactnessReport broken = exactness_check(nob, points);
    CHECK_FALSE(broken.all_exact);
    // points[1] is the exceptional-line sample (x1 = x2 = 0): the first
    // row block of B dies there
    CHECK(broken.points[1].rank_b == 1);
    // the infinity sample (x3 = 0) keeps B nondegenerate
    CHECK(broken.points[0].rank_b == 2);

    // k = 0 is vacuously exact
    const ExactnessReport empty = exactness_check(MonadConfig::zero(0, 3), points);
    CHECK(empty.all_exact);
}

TEST_CASE("dimension count")
{
    CHECK(m0_dimension_check(1, 3).measured == 6);
    CHECK(m0_dimension_check(1, 5).measured == 14);

    const DimensionReport d26 = m0_dimension_check(2, 6);
    CHECK(d26.measured == 24);
    CHECK(d26.match);
    CHECK(d26.measured == oracle::grassmann_pair_dimension(2, 6));

    for (const auto& [k, r] : {std::pair<int, int>{1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 8}}) {
        const DimensionReport rep = m0_dimension_check(k, r);
        CHECK(rep.match);
        CHECK(rep.expected == 4 * r * k - 6 * k * k);
        CHECK(rep.expected == oracle::grassmann_pair_dimension(k, r));
        CHECK(rep.rank_constraint == k * k);
        CHECK(rep.rank_gauge == 2 * k * k);
    }

    CHECK_THROWS_AS(m0_dimension_check(2, 4), std::invalid_argument);
}

TEST_CASE("direct sum")
{
    RandomStream rng(6);
    const SubspacePair sp1 = random_subspace_pair(1, 3, rng);
    const SubspacePair sp2 = random_subspace_pair(2, 5, rng);
    const MonadConfig sum = direct_sum(m0_config(sp1), m0_config(sp2));
    CHECK(sum.k == 3);
    CHECK(sum.r == 8);
    CHECK(integrability_residual(sum) <= 1e-13);

    // identity element
    const MonadConfig same = direct_sum(m0_config(sp1), MonadConfig::empty());
    CHECK((same.b - m0_config(sp1).b).norm() == 0.0);

    // the sum is the M0 configuration of the stacked subspace pair
    SubspacePair stacked;
    stacked.v1 = CMat::Zero(8, 3);
    stacked.v2 = CMat::Zero(8, 3);
    stacked.v1.block(0, 0, 3, 1) = sp1.v1;
    stacked.v1.block(3, 1, 5, 2) = sp2.v1;
    stacked.v2.block(0, 0, 3, 1) = sp1.v2;
    stacked.v2.block(3, 1, 5, 2) = sp2.v2;
    const SubspacePair recovered = m0_subspaces(sum);
    CHECK(subspace_distance(recovered.v1, stacked.v1) <= 1e-10);
    CHECK(subspace_distance(recovered.v2, stacked.v2) <= 1e-10);
}

TEST_CASE("sampled points are deterministic")
{
    const auto a = sample_blowup_points(1, 42);
    CHECK(a.size() == 3);
    const auto b = sample_blowup_points(1, 42);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].s == b[i].s);
    }
    const auto c = sample_blowup_points(1, 43);
    CHECK(a[2].x != c[2].x);
}
