#include "instmod/hilbert.hpp"

#include "instmod/restriction.hpp"

#include <future>
#include <stdexcept>

namespace instmod {

const Int& HilbertVector::at_degree(int d) const
{
    static const Int zero = 0;
    if (d < 0 || d % 2 != 0 || d / 2 >= static_cast<int>(dims.size()))
        return zero;
    return dims[static_cast<std::size_t>(d / 2)];
}

HilbertVector operator+(const HilbertVector& a, const HilbertVector& b)
{
    HilbertVector out;
    out.dims.resize(std::max(a.dims.size(), b.dims.size()), 0);
    for (std::size_t t = 0; t < out.dims.size(); ++t) {
        if (t < a.dims.size())
            out.dims[t] += a.dims[t];
        if (t < b.dims.size())
            out.dims[t] += b.dims[t];
    }
    return out;
}

HilbertVector operator-(const HilbertVector& a, const HilbertVector& b)
{
    HilbertVector out;
    out.dims.resize(std::max(a.dims.size(), b.dims.size()), 0);
    for (std::size_t t = 0; t < out.dims.size(); ++t) {
        if (t < a.dims.size())
            out.dims[t] += a.dims[t];
        if (t < b.dims.size())
            out.dims[t] -= b.dims[t];
    }
    return out;
}

HilbertVector scaled(const Int& scalar, const HilbertVector& v)
{
    HilbertVector out = v;
    for (Int& x : out.dims)
        x *= scalar;
    return out;
}

HilbertVector hilbert_free(const Ring& ring, int max_degree)
{
    if (max_degree < 0 || max_degree % 2 != 0)
        throw std::invalid_argument("hilbert_free: degree bound must be even and nonnegative");
    const int top = max_degree / 2;
    HilbertVector v;
    v.dims.assign(static_cast<std::size_t>(top) + 1, 0);
    v.dims[0] = 1;
    for (const GeneratorSpec& g : ring->gens()) {
        const int step = g.degree / 2;
        for (int t = step; t <= top; ++t)
            v.dims[static_cast<std::size_t>(t)] += v.dims[static_cast<std::size_t>(t - step)];
    }
    return v;
}

HilbertVector hilbert_quotient(const IdealPresentation& ideal, int max_degree)
{
    HilbertVector v = hilbert_free(ideal.ring, max_degree);
    std::vector<std::future<std::pair<int, std::size_t>>> jobs;
    for (int d = 2; d <= max_degree; d += 2)
        jobs.push_back(std::async(std::launch::async,
                                  [&, d] { return std::make_pair(d, ideal_degree_rank(ideal, d)); }));
    for (auto& job : jobs) {
        const auto [d, rank] = job.get();
        v.dims[static_cast<std::size_t>(d / 2)] -= Int(rank);
    }
    return v;
}

namespace {

Ring free_a_ring()  // Z[a1,a2], degrees 2, 4
{
    return make_ring({gen_spec("a", 1, 2), gen_spec("a", 2, 4)});
}

Ring k_summand_ring()  // Z[a1,a2,k1,k2], degrees 2, 4, 2, 4
{
    return make_ring({gen_spec("a", 1, 2), gen_spec("a", 2, 4), gen_spec("k", 1, 2), gen_spec("k", 2, 4)});
}

Ring x_summand_ring()  // Z[x1..x4], all degree 2
{
    return make_ring({gen_spec("x", 1, 2), gen_spec("x", 2, 2), gen_spec("x", 3, 2), gen_spec("x", 4, 2)});
}

}  // namespace

HilbertReport t43_check(int q, int max_degree)
{
    if (q < 0)
        throw std::invalid_argument("t43_check: q >= 0 required");

    // left side: the charge-2 quotient presentation
    const IdealPresentation relations = t2_relation_ideal(q);
    const HilbertVector lhs = hilbert_quotient(relations, max_degree);

    // right side: Z[a1,a2] + q * <k1,k2> + C(q,2) * <x1 x2>
    const HilbertVector free_a = hilbert_free(free_a_ring(), max_degree);
    const HilbertVector k_ideal = hilbert_free(k_summand_ring(), max_degree) - free_a;

    const Ring xr = x_summand_ring();
    const GradedPolynomial x1x2 =
        GradedPolynomial::generator(xr, GenName{"x", 1, Superscript::none()}) *
        GradedPolynomial::generator(xr, GenName{"x", 2, Superscript::none()});
    const IdealPresentation x_ideal_pres(xr, {x1x2});
    const HilbertVector x_ideal = hilbert_free(xr, max_degree) - hilbert_quotient(x_ideal_pres, max_degree);

    const Int pairs = Int(q) * Int(q - 1) / 2;
    const HilbertVector rhs = free_a + Int(q) * k_ideal + pairs * x_ideal;

    HilbertReport report;
    report.q = q;
    report.max_degree = max_degree;
    for (int d = 0; d <= max_degree; d += 2) {
        HilbertDegreeReport r;
        r.d = d;
        r.lhs = lhs.at_degree(d);
        r.rhs = rhs.at_degree(d);
        r.equal = r.lhs == r.rhs;
        report.all_equal = report.all_equal && r.equal;
        report.per_degree.push_back(std::move(r));
    }
    return report;
}

}  // namespace instmod
