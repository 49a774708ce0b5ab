#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "instmod/chern.hpp"

#include <random>

using namespace instmod;

namespace {

TotalClass random_total(const Ring& ring, int trunc, std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    TotalClass u(ring, trunc);
    for (int n = 1; n <= trunc / 2; ++n) {
        GradedPolynomial comp = GradedPolynomial::zero(ring);
        for (const Monomial& m : monomial_basis(ring, 2 * n))
            comp.add_term(m, coef(rng));
        u.set_component(n, std::move(comp));
    }
    return u;
}

}  // namespace

TEST_CASE("series_mul basics")
{
    const Ring orbit = make_ring({gen_spec("c", 1, Superscript::plus(1), 2),
                                  gen_spec("c", 1, Superscript::minus(1), 2)});
    const GradedPolynomial cp = GradedPolynomial::generator(orbit, parse_name("c_1^{1+}"));
    const GradedPolynomial cm = GradedPolynomial::generator(orbit, parse_name("c_1^{1-}"));

    const TotalClass u = TotalClass::one_plus(cp, 8);
    CHECK(series_mul(u, TotalClass::one(orbit, 8)) == u);

    const TotalClass w = series_mul(u, TotalClass::one_plus(cm, 8));
    CHECK(w.component(1) == cp + cm);
    CHECK(w.component(2) == cp * cm);
    CHECK(w.component(3).is_zero());

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const TotalClass a = random_total(orbit, kDefaultTruncation, rng);
        const TotalClass b = random_total(orbit, kDefaultTruncation, rng);
        const TotalClass c = random_total(orbit, kDefaultTruncation, rng);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    }
}

TEST_CASE("series_inverse")
{
    const Ring r = make_ring({gen_spec("c", 1, Superscript::plus(1), 2)});
    const GradedPolynomial c1 = GradedPolynomial::generator(r, 0);

    CHECK(series_inverse(TotalClass::one(r, 8)).is_one());

    // geometric series 1 - c + c^2 - c^3 + ...
    const TotalClass inv = series_inverse(TotalClass::one_plus(c1, 8));
    for (int n = 1; n <= 4; ++n) {
        const Int sign = n % 2 == 0 ? 1 : -1;
        CHECK(inv.component(n) == c1.pow(static_cast<unsigned>(n)) * sign);
    }

    std::mt19937 rng(17);
    const Ring big = rebased_source_ring(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const TotalClass u = random_total(big, 12, rng);
        CHECK(series_mul(u, series_inverse(u)).is_one());
        CHECK(series_inverse(series_inverse(u)) == u);
    }

    TotalClass bad(r, 8);
    GradedPolynomial two = GradedPolynomial::constant(r, 2);
    CHECK_THROWS_AS(bad.set_component(0, two), std::invalid_argument);
}

TEST_CASE("change_of_variables")
{
    // q = 0: the identity on Z[C_n]
    const ChangeOfVariables cov0 = change_of_variables(0, 3);
    for (std::size_t g = 0; g < cov0.forward.source()->size(); ++g) {
        const GradedPolynomial img = cov0.forward.image(g)[0];
        CHECK(img.term_count() == 1);
        CHECK(img.degree() == cov0.forward.source()->gen(g).degree);
    }

    // q = 1, k = 1: S_1^1 pulls back to C_1^1 - C_1^0
    const ChangeOfVariables cov11 = change_of_variables(1, 1);
    const Ring rebased = cov11.backward.source();
    const Ring source = cov11.forward.source();
    const GradedPolynomial s11 = GradedPolynomial::generator(rebased, parse_name("S_1^1"));
    const GradedPolynomial expected = GradedPolynomial::generator(source, parse_name("C_1^1")) -
                                      GradedPolynomial::generator(source, parse_name("C_1^0"));
    CHECK(cov11.backward.apply_single(s11) == expected);

    // round trips on every generator, q <= 3, k <= 3
    for (int q = 0; q <= 3; ++q)
        for (int k = 1; k <= 3; ++k) {
            const ChangeOfVariables cov = change_of_variables(q, k);
            const RingHom back_forward = hom_compose(cov.forward, cov.backward);
            const RingHom forward_back = hom_compose(cov.backward, cov.forward);
            for (std::size_t g = 0; g < cov.forward.source()->size(); ++g)
                CHECK(forward_back.image(g)[0] == GradedPolynomial::generator(cov.forward.source(), g));
            for (std::size_t g = 0; g < cov.backward.source()->size(); ++g)
                CHECK(back_forward.image(g)[0] == GradedPolynomial::generator(cov.backward.source(), g));
        }
}
