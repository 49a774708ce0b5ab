#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace instmod {

/// Optional superscript of a generator symbol: absent, a bare index
/// (C_n^l, S_n^i, X_m^l), or an index with a +/- decoration (c_n^{i+}).
struct Superscript {
    enum class Tag { none, plus, minus };

    int index = -1;  // -1 means no superscript
    Tag tag = Tag::none;

    static Superscript none() { return {}; }
    static Superscript bare(int i) { return {i, Tag::none}; }
    static Superscript plus(int i) { return {i, Tag::plus}; }
    static Superscript minus(int i) { return {i, Tag::minus}; }

    bool present() const { return index >= 0; }

    friend auto operator<=>(const Superscript&, const Superscript&) = default;
};

/// Structured generator symbol: family tag, subscript, superscript.
/// Canonical order is (family, superscript, subscript); this is the order
/// generators take inside a presentation.
struct GenName {
    std::string family;
    int subscript = 1;
    Superscript sup;

    friend bool operator==(const GenName&, const GenName&) = default;
};

inline bool canonical_less(const GenName& a, const GenName& b)
{
    if (a.family != b.family)
        return a.family < b.family;
    if (a.sup != b.sup)
        return a.sup < b.sup;
    return a.subscript < b.subscript;
}

/// ASCII form of a symbol: "C_2^0", "S_1^2", "c_1^{3+}", "a1", "x3".
/// Lowercase families without superscript print without the underscore,
/// matching the a1,a2,k1,k2 / x1..x4 conventions.
std::string print_name(const GenName& name);

/// Inverse of print_name. Throws std::invalid_argument on malformed input.
GenName parse_name(const std::string& text);

/// A polynomial generator together with its (even, positive) degree.
struct GeneratorSpec {
    GenName name;
    int degree = 2;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

inline GeneratorSpec gen_spec(std::string family, int subscript, int degree)
{
    return {GenName{std::move(family), subscript, Superscript::none()}, degree};
}

inline GeneratorSpec gen_spec(std::string family, int subscript, Superscript sup, int degree)
{
    return {GenName{std::move(family), subscript, sup}, degree};
}

/// Ordered generator set of a graded polynomial ring over the integers.
/// Generators are stored in canonical order; the empty presentation is the
/// ring of integers itself.
class RingPresentation {
public:
    RingPresentation() = default;
    explicit RingPresentation(std::vector<GeneratorSpec> gens);

    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const GeneratorSpec& gen(std::size_t i) const { return gens_.at(i); }
    const std::vector<GeneratorSpec>& gens() const { return gens_; }

    std::optional<std::size_t> index_of(const GenName& name) const;

    friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

private:
    std::vector<GeneratorSpec> gens_;
};

/// Presentations are shared immutably between the many values built on them.
using Ring = std::shared_ptr<const RingPresentation>;

Ring make_ring(std::vector<GeneratorSpec> gens);

/// The integers, as the ring with no generators.
inline Ring integer_ring() { return make_ring({}); }

inline bool same_ring(const Ring& a, const Ring& b)
{
    return a == b || (a && b && *a == *b);
}

}  // namespace instmod
