#include "instmod/stable_maps.hpp"

#include "instmod/linalg.hpp"

#include <stdexcept>

namespace instmod {

Ring loop_ring(int q, int m_max)
{
    if (q < 1 || m_max < 1)
        throw std::invalid_argument("loop_ring: q >= 1 and M >= 1 required");
    std::vector<GeneratorSpec> gens;
    for (int i = 1; i <= q; ++i)
        for (int m = 1; m <= m_max; ++m) {
            gens.push_back(gen_spec("x", m, Superscript::plus(i), 2 * m));
            gens.push_back(gen_spec("x", m, Superscript::minus(i), 2 * m));
        }
    return make_ring(std::move(gens));
}

Ring stable_target_ring(int q, int m_max)
{
    if (q < 0 || m_max < 1)
        throw std::invalid_argument("stable_target_ring: q >= 0 and M >= 1 required");
    std::vector<GeneratorSpec> gens;
    for (int l = 0; l <= q; ++l)
        for (int m = 1; m <= m_max; ++m)
            gens.push_back(gen_spec("X", m, Superscript::bare(l), 2 * m));
    return make_ring(std::move(gens));
}

RingHom f_lower_star(int q, int m_max)
{
    const Ring source = loop_ring(q, m_max);
    const Ring target = stable_target_ring(q, m_max);
    std::vector<GradedPolynomial> images(source->size(), GradedPolynomial::zero(target));
    for (int i = 1; i <= q; ++i)
        for (int m = 1; m <= m_max; ++m) {
            GradedPolynomial total = GradedPolynomial::zero(target);
            for (int l = 0; l <= q; ++l)
                total += GradedPolynomial::generator(target, GenName{"X", m, Superscript::bare(l)});
            const GradedPolynomial xi = GradedPolynomial::generator(target, GenName{"X", m, Superscript::bare(i)});
            images[*source->index_of(GenName{"x", m, Superscript::plus(i)})] = total - xi;
            images[*source->index_of(GenName{"x", m, Superscript::minus(i)})] = xi;
        }
    return RingHom::to_ring(source, target, std::move(images));
}

SurjectivityReport surjectivity_check(int q, int m_max)
{
    const RingHom f = f_lower_star(q, m_max);
    const Ring source = f.source();
    const Ring target = f.single_target();

    SurjectivityReport report;
    report.q = q;
    report.m_max = m_max;
    report.surjective = true;

    for (int m = 1; m <= m_max; ++m) {
        // generator matrix in degree 2m: rows = images of x_m^{i+-} in the
        // basis (X_m^0, ..., X_m^q)
        IntMat rows(2 * static_cast<std::size_t>(q), std::vector<Int>(static_cast<std::size_t>(q) + 1, 0));
        std::size_t r = 0;
        for (int i = 1; i <= q; ++i)
            for (const Superscript sup : {Superscript::plus(i), Superscript::minus(i)}) {
                const GradedPolynomial& img = f.image(*source->index_of(GenName{"x", m, sup}))[0];
                for (const auto& [mono, coef] : img.terms())
                    for (std::size_t g = 0; g < target->size(); ++g)
                        if (mono.exps[g] == 1)
                            rows[r][static_cast<std::size_t>(target->gen(g).name.sup.index)] = coef;
                ++r;
            }
        const std::vector<Int> inv = smith_invariants(rows);
        bool trivial = inv.size() == static_cast<std::size_t>(q) + 1;
        for (const Int& v : inv)
            trivial = trivial && v == 1;
        report.cokernel_trivial.push_back(trivial);
        report.surjective = report.surjective && trivial;
    }

    // explicit integer preimages: X_m^i = f(x_m^{i-}),
    // X_m^0 = f(x_m^{1+} + x_m^{1-} - sum_{i>=1} x_m^{i-})
    for (int m = 1; m <= m_max; ++m) {
        for (int l = 0; l <= q; ++l) {
            GradedPolynomial pre = GradedPolynomial::zero(source);
            if (l >= 1) {
                pre = GradedPolynomial::generator(source, GenName{"x", m, Superscript::minus(l)});
            } else {
                pre = GradedPolynomial::generator(source, GenName{"x", m, Superscript::plus(1)}) +
                      GradedPolynomial::generator(source, GenName{"x", m, Superscript::minus(1)});
                for (int i = 1; i <= q; ++i)
                    pre -= GradedPolynomial::generator(source, GenName{"x", m, Superscript::minus(i)});
            }
            const GenName target_gen{"X", m, Superscript::bare(l)};
            if (f.apply_single(pre) != GradedPolynomial::generator(target, target_gen))
                report.surjective = false;
            report.certificates.push_back({target_gen, std::move(pre)});
        }
    }
    return report;
}

}  // namespace instmod
