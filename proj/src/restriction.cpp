#include "instmod/restriction.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

namespace instmod {

int OrbitTuple::charge() const
{
    int k = 0;
    for (int v : j)
        k += v;
    return k;
}

namespace {

void orbits_rec(int q, int k, std::vector<int>& cur, std::vector<OrbitTuple>& out)
{
    if (static_cast<int>(cur.size()) == q - 1) {
        cur.push_back(k);
        out.push_back(OrbitTuple{cur});
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= k; ++v) {
        cur.push_back(v);
        orbits_rec(q, k - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<OrbitTuple> enumerate_orbits(int q, int k)
{
    if (q < 0 || k < 0)
        throw std::invalid_argument("enumerate_orbits: q >= 0 and k >= 0 required");
    std::vector<OrbitTuple> out;
    if (q == 0) {
        if (k == 0)
            out.push_back(OrbitTuple{{}});
        return out;
    }
    std::vector<int> cur;
    orbits_rec(q, k, cur, out);
    return out;
}

Ring orbit_ring(const OrbitTuple& J)
{
    std::vector<GeneratorSpec> gens;
    for (std::size_t i = 0; i < J.j.size(); ++i)
        for (int n = 1; n <= J.j[i]; ++n) {
            gens.push_back(gen_spec("c", n, Superscript::plus(static_cast<int>(i) + 1), 2 * n));
            gens.push_back(gen_spec("c", n, Superscript::minus(static_cast<int>(i) + 1), 2 * n));
        }
    return make_ring(std::move(gens));
}

Ring single_bu_ring(int k) { return rebased_source_ring(0, k); }

std::vector<int> pi_c_selection(const SpinCClass& c, const OrbitTuple& J)
{
    if (c.q() != J.q())
        throw std::invalid_argument("pi_c_selection: length mismatch");
    std::vector<int> sel(J.q(), 0);
    for (std::size_t i = 0; i < J.q(); ++i)
        if (J.j[i] >= 1)
            sel[i] = c.c[i] > 0 ? 1 : -1;
    return sel;
}

namespace {

/// 1 + c_1^{i,eps} + ... + c_{j_i}^{i,eps} inside a fixed orbit ring.
TotalClass slot_series(const Ring& ring, int slot, int sign, int rank, int trunc)
{
    TotalClass u(ring, trunc);
    for (int n = 1; n <= rank; ++n) {
        const Superscript sup = sign > 0 ? Superscript::plus(slot) : Superscript::minus(slot);
        u.set_component(n, GradedPolynomial::generator(ring, GenName{"c", n, sup}));
    }
    return u;
}

TotalClass whitney_product(const Ring& ring, const OrbitTuple& J, const std::vector<int>& sel, int trunc)
{
    TotalClass w = TotalClass::one(ring, trunc);
    for (std::size_t i = 0; i < J.q(); ++i)
        if (J.j[i] >= 1)
            w = series_mul(w, slot_series(ring, static_cast<int>(i) + 1, sel[i], J.j[i], trunc));
    return w;
}

}  // namespace

RingHom restriction_component(const SpinCClass& c, const OrbitTuple& J, int k)
{
    if (J.charge() != k)
        throw std::invalid_argument("restriction_component: |J| != k");
    const Ring source = single_bu_ring(k);
    const Ring target = orbit_ring(J);
    const TotalClass image = whitney_product(target, J, pi_c_selection(c, J), 2 * k);
    std::vector<GradedPolynomial> images;
    images.reserve(source->size());
    for (int n = 1; n <= k; ++n)
        images.push_back(image.component(n));
    return RingHom::to_ring(source, target, std::move(images));
}

RingHom f_star_source(int q, int k)
{
    if (q < 1 || k < 0)
        throw std::invalid_argument("f_star_source: q >= 1 and k >= 0 required");
    const Ring source = product_bu_ring(q, k);
    const std::vector<SpinCClass> classes = chosen_classes(q);
    const std::vector<OrbitTuple> orbits = enumerate_orbits(q, k);

    TupleRing target;
    for (const OrbitTuple& J : orbits)
        target.components.push_back(orbit_ring(J));

    std::vector<Tuple> images(source->size());
    for (std::size_t gi = 0; gi < source->size(); ++gi)
        images[gi].resize(orbits.size(), GradedPolynomial());
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        for (int l = 0; l <= q; ++l) {
            const TotalClass w = whitney_product(target.components[oi], orbits[oi],
                                                 pi_c_selection(classes[static_cast<std::size_t>(l)], orbits[oi]),
                                                 2 * k);
            for (int n = 1; n <= k; ++n) {
                const auto idx = source->index_of(GenName{"C", n, Superscript::bare(l)});
                images[*idx][oi] = w.component(n);
            }
        }
    }
    return RingHom::to_tuple(source, std::move(target), std::move(images));
}

RingHom f_star(int q, int k)
{
    if (q < 1 || k < 0)
        throw std::invalid_argument("f_star: q >= 1 and k >= 0 required");
    const Ring source = rebased_source_ring(q, k);
    const std::vector<OrbitTuple> orbits = enumerate_orbits(q, k);

    TupleRing target;
    for (const OrbitTuple& J : orbits)
        target.components.push_back(orbit_ring(J));

    std::vector<Tuple> images(source->size());
    for (std::size_t gi = 0; gi < source->size(); ++gi)
        images[gi].resize(orbits.size(), GradedPolynomial());

    const int trunc = 2 * k;
    for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
        const OrbitTuple& J = orbits[oi];
        const Ring& comp = target.components[oi];

        // C_n -> [prod_i c^{i+}]_{2n}
        TotalClass plus_product = TotalClass::one(comp, trunc);
        for (std::size_t i = 0; i < J.q(); ++i)
            if (J.j[i] >= 1)
                plus_product = series_mul(plus_product, slot_series(comp, static_cast<int>(i) + 1, +1, J.j[i], trunc));
        for (int n = 1; n <= k; ++n) {
            const auto idx = source->index_of(GenName{"C", n, Superscript::none()});
            images[*idx][oi] = plus_product.component(n);
        }

        // S_n^i -> [(c^{i+})^{-1} c^{i-}]_{2n}, zero on slots with j_i = 0
        for (int i = 1; i <= q; ++i) {
            TotalClass s = TotalClass::one(comp, trunc);
            if (J.j[static_cast<std::size_t>(i - 1)] >= 1) {
                const int rank = J.j[static_cast<std::size_t>(i - 1)];
                s = series_mul(series_inverse(slot_series(comp, i, +1, rank, trunc)),
                               slot_series(comp, i, -1, rank, trunc));
            }
            for (int n = 1; n <= k; ++n) {
                const auto idx = source->index_of(GenName{"S", n, Superscript::bare(i)});
                images[*idx][oi] =
                    J.j[static_cast<std::size_t>(i - 1)] >= 1 ? s.component(n) : GradedPolynomial::zero(comp);
            }
        }
    }
    return RingHom::to_tuple(source, std::move(target), std::move(images));
}

namespace {

GradedPolynomial gen_poly(const Ring& r, const std::string& family, int sub, int sup)
{
    return GradedPolynomial::generator(r, GenName{family, sub, Superscript::bare(sup)});
}

void push_unique(std::vector<GradedPolynomial>& gens, std::set<std::string>& seen, GradedPolynomial p)
{
    if (seen.insert(p.str()).second)
        gens.push_back(std::move(p));
}

}  // namespace

IdealPresentation t2_relation_ideal(int q)
{
    if (q < 0)
        throw std::invalid_argument("t2_relation_ideal: q >= 0 required");
    const Ring ring = rebased_source_ring(q, 2);
    const GradedPolynomial c1 = GradedPolynomial::generator(ring, GenName{"C", 1, Superscript::none()});
    const GradedPolynomial c2 = GradedPolynomial::generator(ring, GenName{"C", 2, Superscript::none()});

    std::vector<GradedPolynomial> gens;
    std::set<std::string> seen;
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= q; ++j) {
            if (i == j)
                continue;
            const GradedPolynomial s1i = gen_poly(ring, "S", 1, i), s1j = gen_poly(ring, "S", 1, j);
            const GradedPolynomial s2i = gen_poly(ring, "S", 2, i), s2j = gen_poly(ring, "S", 2, j);
            push_unique(gens, seen, c1 * s1i * s1j + s1i * s2j + s2i * s1j);
            push_unique(gens, seen, c2 * s1i * s1j - s2i * s2j);
        }
    }
    for (int k = 1; k <= q; ++k)
        for (int i = 1; i <= q; ++i)
            for (int j = i + 1; j <= q; ++j) {
                if (i == k || j == k)
                    continue;
                const GradedPolynomial s1i = gen_poly(ring, "S", 1, i), s1j = gen_poly(ring, "S", 1, j);
                push_unique(gens, seen, s1i * s1j * gen_poly(ring, "S", 1, k));
                push_unique(gens, seen, s1i * s1j * gen_poly(ring, "S", 2, k));
            }
    return IdealPresentation(ring, std::move(gens));
}

IdealPresentation relation_ideal(int q, int k)
{
    if (k == 2)
        return t2_relation_ideal(q);
    if (k != 1)
        throw std::invalid_argument("relation_ideal: only k = 1 and k = 2 are described");
    const Ring ring = rebased_source_ring(q, 1);
    std::vector<GradedPolynomial> gens;
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
            gens.push_back(gen_poly(ring, "S", 1, i) * gen_poly(ring, "S", 1, j));
    return IdealPresentation(ring, std::move(gens));
}

RelationsReport verify_relations_in_kernel(int q)
{
    if (q < 1)
        throw std::invalid_argument("verify_relations_in_kernel: q >= 1 required");
    const RingHom f = f_star(q, 2);
    const IdealPresentation ideal = t2_relation_ideal(q);
    RelationsReport report;
    report.generator_count = ideal.generators.size();
    for (std::size_t gi = 0; gi < ideal.generators.size(); ++gi) {
        const Tuple image = f.apply(ideal.generators[gi]);
        for (std::size_t ci = 0; ci < image.size(); ++ci)
            if (!image[ci].is_zero()) {
                report.all_zero = false;
                report.failures.push_back({gi, ci});
            }
    }
    return report;
}

KernelReport kernel_equals_ideal(int q, int k, int max_degree)
{
    if (k != 1 && k != 2)
        throw std::invalid_argument("kernel_equals_ideal: k must be 1 or 2");
    if (q < 1)
        throw std::invalid_argument("kernel_equals_ideal: q >= 1 required");
    const RingHom f = f_star(q, k);
    const IdealPresentation ideal = relation_ideal(q, k);

    KernelReport report;
    report.q = q;
    report.k = k;

    std::vector<std::future<KernelDegreeReport>> jobs;
    for (int d = 0; d <= max_degree; d += 2)
        jobs.push_back(std::async(std::launch::async, [&, d] {
            KernelDegreeReport r;
            r.d = d;
            r.dim_kernel = kernel_degree_dim(f, d);
            r.dim_ideal = ideal_degree_rank(ideal, d);
            r.equal = r.dim_kernel == r.dim_ideal;
            return r;
        }));
    for (auto& job : jobs) {
        report.degrees.push_back(job.get());
        report.all_equal = report.all_equal && report.degrees.back().equal;
    }

    for (const GradedPolynomial& g : ideal.generators)
        if (!tuple_is_zero(f.apply(g)))
            report.relations_in_kernel = false;
    return report;
}

bool identity_check()
{
    const Ring ring = rebased_source_ring(2, 2);
    const GradedPolynomial c1 = GradedPolynomial::generator(ring, GenName{"C", 1, Superscript::none()});
    const GradedPolynomial c2 = GradedPolynomial::generator(ring, GenName{"C", 2, Superscript::none()});
    auto check = [&](int i, int j) {
        const GradedPolynomial s1i = gen_poly(ring, "S", 1, i), s1j = gen_poly(ring, "S", 1, j);
        const GradedPolynomial s2i = gen_poly(ring, "S", 2, i), s2j = gen_poly(ring, "S", 2, j);
        const GradedPolynomial lhs =
            s2i * (c1 * s1i * s1j + s1i * s2j + s2i * s1j) + s1i * (c2 * s1i * s1j - s2i * s2j);
        const GradedPolynomial rhs = s1j * (s2i * s2i + c1 * s1i * s2i + c2 * s1i * s1i);
        return lhs == rhs;
    };
    return check(1, 2) && check(2, 1);
}

}  // namespace instmod
