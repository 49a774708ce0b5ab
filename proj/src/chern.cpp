#include "instmod/chern.hpp"

#include <stdexcept>

namespace instmod {

TotalClass::TotalClass(Ring ring, int trunc)
    : ring_(std::move(ring)), trunc_(trunc), zero_(GradedPolynomial::zero(ring_))
{
    if (trunc_ < 0 || trunc_ % 2 != 0)
        throw std::invalid_argument("TotalClass: truncation order must be even and nonnegative");
    comps_.assign(static_cast<std::size_t>(trunc_ / 2) + 1, GradedPolynomial::zero(ring_));
    comps_[0] = GradedPolynomial::constant(ring_, 1);
}

TotalClass TotalClass::one(Ring ring, int trunc) { return TotalClass(std::move(ring), trunc); }

TotalClass TotalClass::one_plus(const GradedPolynomial& p, int trunc)
{
    TotalClass u(p.ring(), trunc);
    for (const auto& [mono, coef] : p.terms()) {
        const int d = mono.degree(*p.ring());
        if (d == 0)
            throw std::invalid_argument("TotalClass::one_plus: input must have zero constant term");
        if (d <= trunc)
            u.comps_[static_cast<std::size_t>(d / 2)].add_term(mono, coef);
    }
    return u;
}

const GradedPolynomial& TotalClass::component(int n) const
{
    if (n < 0 || n > trunc_ / 2)
        return zero_;
    return comps_[static_cast<std::size_t>(n)];
}

void TotalClass::set_component(int n, GradedPolynomial p)
{
    if (n < 0 || n > trunc_ / 2)
        throw std::out_of_range("TotalClass::set_component: index beyond truncation");
    if (!same_ring(p.ring(), ring_))
        throw std::invalid_argument("TotalClass::set_component: presentation mismatch");
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != 2 * n))
        throw std::invalid_argument("TotalClass::set_component: component must be homogeneous of its degree");
    if (n == 0 && p != GradedPolynomial::constant(ring_, 1))
        throw std::invalid_argument("TotalClass::set_component: degree-0 component must be 1");
    comps_[static_cast<std::size_t>(n)] = std::move(p);
}

bool TotalClass::is_one() const
{
    for (std::size_t n = 1; n < comps_.size(); ++n)
        if (!comps_[n].is_zero())
            return false;
    return true;
}

bool operator==(const TotalClass& a, const TotalClass& b)
{
    if (!same_ring(a.ring_, b.ring_) || a.trunc_ != b.trunc_)
        return false;
    return a.comps_ == b.comps_;
}

TotalClass series_mul(const TotalClass& u, const TotalClass& v)
{
    if (!same_ring(u.ring(), v.ring()) || u.truncation() != v.truncation())
        throw std::invalid_argument("series_mul: ring or truncation mismatch");
    TotalClass w(u.ring(), u.truncation());
    const int top = u.truncation() / 2;
    for (int n = 1; n <= top; ++n) {
        GradedPolynomial acc = GradedPolynomial::zero(u.ring());
        for (int a = 0; a <= n; ++a)
            acc += u.component(a) * v.component(n - a);
        w.set_component(n, std::move(acc));
    }
    return w;
}

TotalClass series_inverse(const TotalClass& u)
{
    if (u.component(0) != GradedPolynomial::constant(u.ring(), 1))
        throw std::invalid_argument("series_inverse: unit component must be 1");
    TotalClass inv(u.ring(), u.truncation());
    const int top = u.truncation() / 2;
    for (int n = 1; n <= top; ++n) {
        GradedPolynomial acc = GradedPolynomial::zero(u.ring());
        for (int m = 1; m <= n; ++m)
            acc -= u.component(m) * inv.component(n - m);
        inv.set_component(n, std::move(acc));
    }
    return inv;
}

Ring product_bu_ring(int q, int k)
{
    if (q < 0 || k < 0)
        throw std::invalid_argument("product_bu_ring: q >= 0 and k >= 0 required");
    std::vector<GeneratorSpec> gens;
    for (int l = 0; l <= q; ++l)
        for (int n = 1; n <= k; ++n)
            gens.push_back(gen_spec("C", n, Superscript::bare(l), 2 * n));
    return make_ring(std::move(gens));
}

Ring rebased_source_ring(int q, int k)
{
    if (q < 0 || k < 0)
        throw std::invalid_argument("rebased_source_ring: q >= 0 and k >= 0 required");
    std::vector<GeneratorSpec> gens;
    for (int n = 1; n <= k; ++n)
        gens.push_back(gen_spec("C", n, 2 * n));
    for (int i = 1; i <= q; ++i)
        for (int n = 1; n <= k; ++n)
            gens.push_back(gen_spec("S", n, Superscript::bare(i), 2 * n));
    return make_ring(std::move(gens));
}

namespace {

/// 1 + g_1 + ... + g_k as a total class from consecutive generators.
TotalClass generator_series(const Ring& ring, const std::string& family, Superscript sup, int k, int trunc)
{
    TotalClass u(ring, trunc);
    for (int n = 1; n <= k; ++n) {
        GenName name{family, n, sup};
        u.set_component(n, GradedPolynomial::generator(ring, name));
    }
    return u;
}

}  // namespace

ChangeOfVariables change_of_variables(int q, int k)
{
    const Ring source = product_bu_ring(q, k);
    const Ring rebased = rebased_source_ring(q, k);
    const int trunc = 2 * k;

    // forward: C_n^0 -> C_n, C_n^i -> [C * S^i]_{2n}
    const TotalClass c_total = generator_series(rebased, "C", Superscript::none(), k, trunc);
    std::vector<GradedPolynomial> fwd(source->size(), GradedPolynomial::zero(rebased));
    for (int l = 0; l <= q; ++l) {
        TotalClass image = c_total;
        if (l >= 1) {
            const TotalClass s_total = generator_series(rebased, "S", Superscript::bare(l), k, trunc);
            image = series_mul(c_total, s_total);
        }
        for (int n = 1; n <= k; ++n) {
            const auto idx = source->index_of(GenName{"C", n, Superscript::bare(l)});
            fwd[*idx] = image.component(n);
        }
    }

    // backward: C_n -> C_n^0, S_n^i -> [(C^0)^{-1} C^i]_{2n}
    const TotalClass c0 = generator_series(source, "C", Superscript::bare(0), k, trunc);
    const TotalClass c0_inv = series_inverse(c0);
    std::vector<GradedPolynomial> bwd(rebased->size(), GradedPolynomial::zero(source));
    for (int n = 1; n <= k; ++n) {
        const auto idx = rebased->index_of(GenName{"C", n, Superscript::none()});
        bwd[*idx] = GradedPolynomial::generator(source, GenName{"C", n, Superscript::bare(0)});
    }
    for (int i = 1; i <= q; ++i) {
        const TotalClass ci = generator_series(source, "C", Superscript::bare(i), k, trunc);
        const TotalClass si = series_mul(c0_inv, ci);
        for (int n = 1; n <= k; ++n) {
            const auto idx = rebased->index_of(GenName{"S", n, Superscript::bare(i)});
            bwd[*idx] = si.component(n);
        }
    }

    return ChangeOfVariables{RingHom::to_ring(source, rebased, std::move(fwd)),
                             RingHom::to_ring(rebased, source, std::move(bwd))};
}

}  // namespace instmod
