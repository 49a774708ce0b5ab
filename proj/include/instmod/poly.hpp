#pragma once

#include "instmod/numeric.hpp"
#include "instmod/symbols.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace instmod {

using Exp = std::uint32_t;

/// Exponent vector aligned with a presentation's generator order.
struct Monomial {
    std::vector<Exp> exps;

    static Monomial one(std::size_t ngens) { return Monomial{std::vector<Exp>(ngens, 0)}; }

    int degree(const RingPresentation& ring) const;
    Monomial operator*(const Monomial& rhs) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: degree first, then the exponent vector.
/// This matches the canonical term/basis order used throughout.
struct GradedLexLess {
    const RingPresentation* ring = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse homogeneous-capable polynomial with exact integer coefficients
/// in a fixed presentation. Terms are kept in canonical graded-lex order
/// with no explicit zeros.
class GradedPolynomial {
public:
    using TermMap = std::map<Monomial, Int, GradedLexLess>;

    GradedPolynomial() : GradedPolynomial(integer_ring()) {}
    explicit GradedPolynomial(Ring ring);

    static GradedPolynomial zero(Ring ring) { return GradedPolynomial(std::move(ring)); }
    static GradedPolynomial constant(Ring ring, Int value);
    static GradedPolynomial generator(Ring ring, std::size_t index);
    static GradedPolynomial generator(Ring ring, const GenName& name);
    static GradedPolynomial term(Ring ring, Monomial mono, Int coef);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Maximum term degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    /// The terms of degree exactly d.
    GradedPolynomial homogeneous_component(int d) const;

    Int coefficient(const Monomial& mono) const;
    void add_term(const Monomial& mono, const Int& coef);

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& rhs);
    GradedPolynomial& operator-=(const GradedPolynomial& rhs);
    friend GradedPolynomial operator+(GradedPolynomial lhs, const GradedPolynomial& rhs) { return lhs += rhs; }
    friend GradedPolynomial operator-(GradedPolynomial lhs, const GradedPolynomial& rhs) { return lhs -= rhs; }
    friend GradedPolynomial operator*(const GradedPolynomial& lhs, const GradedPolynomial& rhs);
    GradedPolynomial& operator*=(const GradedPolynomial& rhs) { return *this = *this * rhs; }
    GradedPolynomial operator*(const Int& scalar) const;
    GradedPolynomial pow(unsigned n) const;

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);
    friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) { return !(a == b); }

    /// Canonical text form, terms in graded-lex order ("1 - (S_1^1)^2").
    std::string str() const;

private:
    void check_same_ring(const GradedPolynomial& other) const;

    Ring ring_;
    TermMap terms_;
};

enum class PolyOp { add, mul };

/// Spec-level arithmetic entry point; errors on presentation mismatch.
GradedPolynomial poly_arith(const GradedPolynomial& a, const GradedPolynomial& b, PolyOp op);

/// All monomials of degree exactly d in graded-lex order. Odd or negative
/// d yields the empty list.
std::vector<Monomial> monomial_basis(const Ring& ring, int d);

/// Number of degree-d monomials, without materializing them.
Int monomial_count(const RingPresentation& ring, int d);

}  // namespace instmod
