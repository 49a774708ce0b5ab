#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instmod/chern.hpp"
#include "instmod/hom.hpp"
#include "instmod/ideal.hpp"
#include "instmod/linalg.hpp"
#include "instmod/poly.hpp"
#include "instmod/restriction.hpp"
#include "instmod/serialize.hpp"
#include "oracles.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace instmod;

namespace {

GradedPolynomial gp(const Ring& r, const char* name) { return GradedPolynomial::generator(r, parse_name(name)); }

GradedPolynomial random_poly(const Ring& ring, int max_degree, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 5);
    GradedPolynomial p = GradedPolynomial::zero(ring);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial mono = Monomial::one(ring->size());
        int budget = max_degree;
        for (std::size_t g = 0; g < ring->size(); ++g) {
            const int deg = ring->gen(g).degree;
            std::uniform_int_distribution<int> e(0, budget / deg);
            mono.exps[g] = static_cast<Exp>(e(rng));
            budget -= static_cast<int>(mono.exps[g]) * deg;
        }
        p.add_term(mono, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("generator names print and parse")
{
    const GenName c20 = parse_name("C_2^0");
    CHECK(c20.family == "C");
    CHECK(c20.subscript == 2);
    CHECK(c20.sup == Superscript::bare(0));
    CHECK(print_name(c20) == "C_2^0");

    CHECK(print_name(parse_name("c_1^{3+}")) == "c_1^{3+}");
    CHECK(print_name(parse_name("x_2^{1-}")) == "x_2^{1-}");
    CHECK(print_name(parse_name("a1")) == "a1");
    CHECK(print_name(parse_name("S_1^2")) == "S_1^2");
    CHECK_THROWS_AS(parse_name("bogus^"), std::invalid_argument);
}

TEST_CASE("presentation canonical order and invariants")
{
    // family, then superscript, then subscript
    const Ring r = rebased_source_ring(2, 2);
    REQUIRE(r->size() == 6);
    CHECK(print_name(r->gen(0).name) == "C_1");
    CHECK(print_name(r->gen(1).name) == "C_2");
    CHECK(print_name(r->gen(2).name) == "S_1^1");
    CHECK(print_name(r->gen(3).name) == "S_2^1");
    CHECK(print_name(r->gen(4).name) == "S_1^2");
    CHECK(print_name(r->gen(5).name) == "S_2^2");

    CHECK_THROWS_AS(make_ring({gen_spec("C", 1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(make_ring({gen_spec("C", 1, 2), gen_spec("C", 1, 2)}), std::invalid_argument);
    CHECK(integer_ring()->empty());
}

TEST_CASE("poly_arith examples")
{
    const Ring r = rebased_source_ring(2, 1);  // Z[C_1, S_1^1, S_1^2]
    const GradedPolynomial c1 = gp(r, "C_1");
    const GradedPolynomial s11 = gp(r, "S_1^1");
    const GradedPolynomial s12 = gp(r, "S_1^2");

    CHECK(poly_arith(c1, c1, PolyOp::mul) == c1.pow(2));

    const GradedPolynomial one = GradedPolynomial::constant(r, 1);
    CHECK(poly_arith(one + s11, one - s11, PolyOp::mul) == one - s11.pow(2));
    CHECK((one - s11.pow(2)).str() == "1 - (S_1^1)^2");

    const GradedPolynomial p = poly_arith(s11 * s12, s11, PolyOp::mul);
    CHECK(p == s11.pow(2) * s12);
    CHECK(p.degree() == 6);
    CHECK(p.is_homogeneous());

    const Ring other = rebased_source_ring(1, 1);
    CHECK_THROWS_AS(poly_arith(c1, GradedPolynomial::constant(other, 1), PolyOp::add), std::invalid_argument);
}

TEST_CASE("monomial_basis enumeration")
{
    const Ring zc = make_ring({gen_spec("C", 1, 2), gen_spec("C", 2, 4)});
    const auto basis = monomial_basis(zc, 4);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].exps == std::vector<Exp>{0, 1});  // C_2 first in graded-lex
    CHECK(basis[1].exps == std::vector<Exp>{2, 0});

    const Ring src = rebased_source_ring(2, 2);
    CHECK(monomial_basis(src, 4).size() == 9);
    std::vector<int> degrees;
    for (const auto& g : src->gens())
        degrees.push_back(g.degree);
    CHECK(oracle::count_monomials(degrees, 4) == 9);
    for (int d = 0; d <= 16; d += 2)
        CHECK(monomial_basis(src, d).size() == oracle::count_monomials(degrees, d));
    CHECK(monomial_count(*src, 12) == Int(oracle::count_monomials(degrees, 12)));

    CHECK(monomial_basis(src, 0).size() == 1);
    CHECK(monomial_basis(src, 3).empty());
    CHECK(monomial_basis(src, -2).empty());
}

TEST_CASE("hom_apply laws and errors")
{
    const Ring src = make_ring({gen_spec("C", 1, 2), gen_spec("C", 2, 4)});
    const Ring dst = make_ring({gen_spec("a", 1, 2), gen_spec("a", 2, 4)});
    const GradedPolynomial a1 = gp(dst, "a1"), a2 = gp(dst, "a2");

    const RingHom id = identity_hom(src);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const GradedPolynomial p = random_poly(src, 12, rng);
        CHECK(id.apply_single(p) == p);
    }

    const RingHom h = RingHom::to_ring(src, dst, {a1 * 2, a2 - a1.pow(2)});
    for (int trial = 0; trial < 50; ++trial) {
        const GradedPolynomial p = random_poly(src, 12, rng);
        const GradedPolynomial q = random_poly(src, 12, rng);
        CHECK(h.apply_single(p * q) == h.apply_single(p) * h.apply_single(q));
        CHECK(h.apply_single(p + q) == h.apply_single(p) + h.apply_single(q));
    }

    CHECK_THROWS_AS(h.apply(GradedPolynomial::constant(dst, 1)), std::invalid_argument);
    // degree violation rejected at construction
    CHECK_THROWS_AS(RingHom::to_ring(src, dst, {a2, a2}), std::invalid_argument);
}

TEST_CASE("kernel_degree basics")
{
    const Ring src = make_ring({gen_spec("C", 1, 2), gen_spec("C", 2, 4)});

    // zero homomorphism into the integers: full kernel in positive degrees
    const RingHom zero = RingHom::to_ring(src, integer_ring(),
                                          {GradedPolynomial::zero(integer_ring()),
                                           GradedPolynomial::zero(integer_ring())});
    for (int d = 2; d <= 8; d += 2)
        CHECK(kernel_degree(zero, d).size() == monomial_basis(src, d).size());

    // injective renaming: trivial kernel
    const Ring dst = make_ring({gen_spec("a", 1, 2), gen_spec("a", 2, 4)});
    const RingHom rename = RingHom::to_ring(src, dst, {gp(dst, "a1"), gp(dst, "a2")});
    for (int d = 0; d <= 10; d += 2) {
        CHECK(kernel_degree(rename, d).empty());
        CHECK(kernel_degree_dim(rename, d) == 0);
    }
}

TEST_CASE("kernel_degree of f* at q=2, k=1, d=4")
{
    const RingHom f = f_star(2, 1);
    const auto kernel = kernel_degree(f, 4);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel_degree_dim(f, 4) == 1);

    const Ring src = f.source();
    const GradedPolynomial expected = gp(src, "S_1^1") * gp(src, "S_1^2");
    CHECK((kernel[0] == expected || kernel[0] == -expected));

    // independent row-reduction oracle: rank of the image matrix
    const auto basis = monomial_basis(src, 4);
    std::vector<std::vector<Rat>> rows;
    for (const Monomial& mono : basis) {
        const Tuple img = f.apply(GradedPolynomial::term(src, mono, 1));
        std::vector<Rat> row;
        for (std::size_t comp = 0; comp < img.size(); ++comp)
            for (const Monomial& tm : monomial_basis(f.target().components[comp], 4)) {
                row.emplace_back(img[comp].coefficient(tm));
            }
        rows.push_back(std::move(row));
    }
    CHECK(basis.size() - oracle::rank_rational(rows) == 1);
}

TEST_CASE("ideal_degree_basis examples")
{
    const Ring r = rebased_source_ring(2, 1);  // Z[C_1, S_1^1, S_1^2]
    const IdealPresentation ideal(r, {gp(r, "S_1^1") * gp(r, "S_1^2")});

    const auto d4 = ideal_degree_basis(ideal, 4);
    REQUIRE(d4.size() == 1);
    CHECK(d4[0] == gp(r, "S_1^1") * gp(r, "S_1^2"));

    const auto d6 = ideal_degree_basis(ideal, 6);
    CHECK(d6.size() == 3);
    CHECK(ideal_degree_rank(ideal, 6) == 3);

    CHECK(ideal_degree_basis(ideal, 2).empty());
    CHECK(ideal_degree_rank(ideal, 0) == 0);

    // sparse and dense ranks agree on a nontrivial ideal
    const IdealPresentation rel = t2_relation_ideal(3);
    for (int d = 0; d <= 12; d += 2)
        CHECK(ideal_degree_rank(rel, d) == ideal_degree_basis(rel, d).size());
}

TEST_CASE("membership rational and integral")
{
    const Ring r = rebased_source_ring(2, 1);
    const GradedPolynomial s11 = gp(r, "S_1^1"), s12 = gp(r, "S_1^2"), c1 = gp(r, "C_1");

    const IdealPresentation i1(r, {s11});
    const auto m1 = membership(s11 * s12, i1, MembershipMode::rational);
    CHECK(m1.member);
    REQUIRE(m1.certificate.has_value());
    GradedPolynomial recon = GradedPolynomial::zero(r);
    for (std::size_t g = 0; g < i1.generators.size(); ++g)
        recon += m1.certificate->cofactors[g] * i1.generators[g];
    CHECK(recon == (s11 * s12) * m1.certificate->scale);

    const IdealPresentation i2(r, {s11 * s12});
    CHECK_FALSE(membership(c1, i2, MembershipMode::rational).member);
    CHECK_FALSE(membership(c1, i2, MembershipMode::integral).member);
    CHECK_THROWS_AS(membership(c1 + GradedPolynomial::constant(r, 1), i2, MembershipMode::rational),
                    std::invalid_argument);

    // scaling separates the two modes: x in <2x> over Q but not over Z
    const IdealPresentation doubled(r, {s11 * 2});
    const auto rat = membership(s11 * c1, doubled, MembershipMode::rational);
    CHECK(rat.member);
    CHECK(rat.certificate->scale == 2);
    const auto integral = membership(s11 * c1, doubled, MembershipMode::integral);
    CHECK_FALSE(integral.member);
    const auto even = membership(s11 * c1 * 2, doubled, MembershipMode::integral);
    CHECK(even.member);
    CHECK(even.certificate->scale == 1);
}

TEST_CASE("exact linear algebra")
{
    CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
    CHECK(smith_invariants({{2, 4}, {6, 8}}) == std::vector<Int>{2, 4});

    const IntMat m = {{1, 1, 1}};
    const IntMat ns = nullspace_int(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        CHECK(v[0] + v[1] + v[2] == 0);

    CHECK(solve_integer({{2}}, {4}).value() == std::vector<Int>{2});
    CHECK_FALSE(solve_integer({{2}}, {3}).has_value());
    CHECK(solve_rational({{2}}, {3}).has_value());

    // rank agrees with the independent oracle on random matrices
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        IntMat a(5, std::vector<Int>(7));
        std::vector<std::vector<Rat>> ar(5, std::vector<Rat>(7));
        std::vector<SparseRow> sparse(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                const int v = entry(rng);
                a[i][j] = v;
                ar[i][j] = v;
                if (v != 0)
                    sparse[i].emplace_back(j, v);
            }
        const std::size_t expect = oracle::rank_rational(ar);
        CHECK(rank_int(a) == expect);
        CHECK(rank_sparse(sparse, 7) == expect);
    }
}

TEST_CASE("json round trips")
{
    const Ring r = rebased_source_ring(2, 2);
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        GradedPolynomial p = random_poly(r, 10, rng);
        // force a coefficient outside 64 bits
        p += GradedPolynomial::constant(r, Int("123456789012345678901234567890"));
        const nlohmann::json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
    }
    const nlohmann::json j = poly_to_json(GradedPolynomial::generator(r, parse_name("S_2^1")));
    CHECK(j.at("gens").size() == 6);
    CHECK(j.at("terms").at(0).at("coef").get<std::string>() == "1");

    RandomStream mrng(7);
    const MonadConfig cfg = m0_config(random_subspace_pair(2, 5, mrng));
    const MonadConfig back = monad_config_from_json(monad_config_to_json(cfg));
    CHECK((back.b - cfg.b).norm() == 0.0);
    CHECK((back.c - cfg.c).norm() == 0.0);

    const nlohmann::json random_mode = {{"mode", "random_m0"}, {"k", 1}, {"r", 3}, {"seed", 5}};
    const MonadConfig sampled = monad_config_from_json(random_mode);
    CHECK(integrability_residual(sampled) <= 1e-14);
}

TEST_CASE("integer solving against brute force")
{
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat a(3, std::vector<Int>(4));
        for (auto& row : a)
            for (Int& v : row)
                v = entry(rng);

        // planted solution: solvable, and the returned solution must satisfy
        std::vector<Int> x0(4), b(3, 0);
        for (Int& v : x0)
            v = entry(rng);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                b[i] += a[i][j] * x0[j];
        const auto sol = solve_integer(a, b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < 3; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < 4; ++j)
                acc += a[i][j] * (*sol)[j];
            CHECK(acc == b[i]);
        }

        // rationally unsolvable implies integrally unsolvable
        std::vector<Int> bad = b;
        bad[0] += 1;
        if (!solve_rational(a, bad))
            CHECK_FALSE(solve_integer(a, bad).has_value());
    }

    // 2 x0 is always in <2 gens>; x0 itself only when a unimodular combo exists
    for (int trial = 0; trial < 30; ++trial) {
        IntMat a(3, std::vector<Int>(3));
        for (auto& row : a)
            for (Int& v : row)
                v = 2 * entry(rng);
        std::vector<Int> x0(3), b(3, 0);
        for (Int& v : x0)
            v = entry(rng);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                b[i] += a[i][j] * x0[j];
        CHECK(solve_integer(a, b).has_value());
    }
}

TEST_CASE("smith invariants against the gcd-of-minors oracle")
{
    auto det3 = [](const IntMat& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat m(3, std::vector<Int>(3));
        for (auto& row : m)
            for (Int& v : row)
                v = entry(rng);

        Int g1 = 0;
        for (const auto& row : m)
            for (const Int& v : row)
                g1 = gcd_int(g1, v);
        Int g2 = 0;
        for (int i0 = 0; i0 < 3; ++i0)
            for (int i1 = i0 + 1; i1 < 3; ++i1)
                for (int j0 = 0; j0 < 3; ++j0)
                    for (int j1 = j0 + 1; j1 < 3; ++j1)
                        g2 = gcd_int(g2, m[i0][j0] * m[i1][j1] - m[i0][j1] * m[i1][j0]);
        const Int g3 = abs_int(det3(m));

        std::vector<Int> expected;
        if (g1 != 0)
            expected.push_back(g1);
        if (g2 != 0)
            expected.push_back(g2 / g1);
        if (g3 != 0)
            expected.push_back(g3 / g2);
        CHECK(smith_invariants(m) == expected);
    }
}

TEST_CASE("randomized ring laws")
{
    const Ring r = rebased_source_ring(2, 2);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const GradedPolynomial a = random_poly(r, 8, rng);
        const GradedPolynomial b = random_poly(r, 8, rng);
        const GradedPolynomial c = random_poly(r, 8, rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    // homogeneous products have additive degrees
    const GradedPolynomial p = gp(r, "C_1") + gp(r, "S_1^1") * 2;
    const GradedPolynomial q = gp(r, "C_2") - gp(r, "S_1^2") * gp(r, "S_1^1");
    CHECK(p.is_homogeneous());
    CHECK(q.is_homogeneous());
    CHECK((p * q).is_homogeneous());
    CHECK((p * q).degree() == p.degree() + q.degree());
}
