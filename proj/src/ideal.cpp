#include "instmod/ideal.hpp"

#include "instmod/linalg.hpp"

#include <map>
#include <stdexcept>

namespace instmod {

IdealPresentation::IdealPresentation(Ring r, std::vector<GradedPolynomial> gens)
    : ring(std::move(r)), generators(std::move(gens))
{
    for (const GradedPolynomial& g : generators) {
        if (!same_ring(g.ring(), ring))
            throw std::invalid_argument("ideal generator lives in a different presentation");
        if (g.is_zero() || !g.is_homogeneous() || g.degree() <= 0)
            throw std::invalid_argument("ideal generators must be homogeneous of positive degree");
    }
}

namespace {

struct DegreePiece {
    std::vector<Monomial> basis;                            // degree-d monomials of the ambient ring
    std::map<Monomial, std::size_t, GradedLexLess> index;   // monomial -> column
    std::vector<std::pair<std::size_t, Monomial>> spanners; // (generator, multiplier) pairs

    explicit DegreePiece(const Ring& ring) : index(GradedLexLess{ring.get()}) {}
};

DegreePiece degree_piece(const IdealPresentation& ideal, int d)
{
    DegreePiece piece(ideal.ring);
    piece.basis = monomial_basis(ideal.ring, d);
    for (std::size_t i = 0; i < piece.basis.size(); ++i)
        piece.index.emplace(piece.basis[i], i);
    for (std::size_t g = 0; g < ideal.generators.size(); ++g)
        for (const Monomial& m : monomial_basis(ideal.ring, d - ideal.generators[g].degree()))
            piece.spanners.emplace_back(g, m);
    return piece;
}

SparseRow product_row(const IdealPresentation& ideal, const DegreePiece& piece, std::size_t g, const Monomial& m)
{
    SparseRow row;
    for (const auto& [mono, coef] : ideal.generators[g].terms())
        row.emplace_back(piece.index.at(mono * m), coef);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

}  // namespace

std::vector<GradedPolynomial> ideal_degree_basis(const IdealPresentation& ideal, int d)
{
    const DegreePiece piece = degree_piece(ideal, d);
    IntMat rows;
    rows.reserve(piece.spanners.size());
    for (const auto& [g, m] : piece.spanners) {
        std::vector<Int> row(piece.basis.size(), 0);
        for (const auto& [col, coef] : product_row(ideal, piece, g, m))
            row[col] = coef;
        rows.push_back(std::move(row));
    }
    const std::size_t rank = rref_int(rows);
    std::vector<GradedPolynomial> out;
    out.reserve(rank);
    for (std::size_t r = 0; r < rank; ++r) {
        GradedPolynomial p = GradedPolynomial::zero(ideal.ring);
        for (std::size_t c = 0; c < piece.basis.size(); ++c)
            p.add_term(piece.basis[c], rows[r][c]);
        out.push_back(std::move(p));
    }
    return out;
}

std::size_t ideal_degree_rank(const IdealPresentation& ideal, int d)
{
    const DegreePiece piece = degree_piece(ideal, d);
    std::vector<SparseRow> rows;
    rows.reserve(piece.spanners.size());
    for (const auto& [g, m] : piece.spanners)
        rows.push_back(product_row(ideal, piece, g, m));
    return rank_sparse(std::move(rows), piece.basis.size());
}

MembershipResult membership(const GradedPolynomial& p, const IdealPresentation& ideal, MembershipMode mode)
{
    if (!same_ring(p.ring(), ideal.ring))
        throw std::invalid_argument("membership: polynomial not in the ideal's ring");
    if (!p.is_homogeneous())
        throw std::invalid_argument("membership: inhomogeneous input");

    MembershipResult result;
    if (p.is_zero()) {
        result.member = true;
        result.certificate = MembershipCertificate{
            1, std::vector<GradedPolynomial>(ideal.generators.size(), GradedPolynomial::zero(ideal.ring))};
        return result;
    }

    const int d = p.degree();
    const DegreePiece piece = degree_piece(ideal, d);
    if (piece.spanners.empty())
        return result;

    // columns = spanning products, rows = degree-d monomial coordinates
    IntMat a(piece.basis.size(), std::vector<Int>(piece.spanners.size(), 0));
    for (std::size_t j = 0; j < piece.spanners.size(); ++j) {
        const auto& [g, m] = piece.spanners[j];
        for (const auto& [col, coef] : product_row(ideal, piece, g, m))
            a[col][j] = coef;
    }
    std::vector<Int> b(piece.basis.size(), 0);
    for (const auto& [mono, coef] : p.terms())
        b[piece.index.at(mono)] = coef;

    std::vector<Int> coeffs(piece.spanners.size(), 0);
    Int scale = 1;
    if (mode == MembershipMode::integral) {
        auto x = solve_integer(a, b);
        if (!x)
            return result;
        coeffs = std::move(*x);
    } else {
        auto x = solve_rational(a, b);
        if (!x)
            return result;
        for (const Rat& v : *x)
            scale = lcm_int(scale, Int(boost::multiprecision::denominator(v)));
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            coeffs[j] = Int(boost::multiprecision::numerator((*x)[j]) *
                            (scale / boost::multiprecision::denominator((*x)[j])));
    }

    MembershipCertificate cert;
    cert.scale = scale;
    cert.cofactors.assign(ideal.generators.size(), GradedPolynomial::zero(ideal.ring));
    for (std::size_t j = 0; j < piece.spanners.size(); ++j)
        if (coeffs[j] != 0)
            cert.cofactors[piece.spanners[j].first].add_term(piece.spanners[j].second, coeffs[j]);

    result.member = true;
    result.certificate = std::move(cert);
    return result;
}

}  // namespace instmod
