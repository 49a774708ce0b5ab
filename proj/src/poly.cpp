#include "instmod/poly.hpp"

#include <algorithm>
#include <sstream>

namespace instmod {

int Monomial::degree(const RingPresentation& ring) const
{
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        d += static_cast<int>(exps[i]) * ring.gen(i).degree;
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    Monomial out = *this;
    for (std::size_t i = 0; i < exps.size(); ++i)
        out.exps[i] += rhs.exps[i];
    return out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const int da = a.degree(*ring);
    const int db = b.degree(*ring);
    if (da != db)
        return da < db;
    return a.exps < b.exps;
}

GradedPolynomial::GradedPolynomial(Ring ring) : ring_(std::move(ring)), terms_(GradedLexLess{ring_.get()}) {}

GradedPolynomial GradedPolynomial::constant(Ring ring, Int value)
{
    GradedPolynomial p(std::move(ring));
    if (value != 0)
        p.terms_.emplace(Monomial::one(p.ring_->size()), std::move(value));
    return p;
}

GradedPolynomial GradedPolynomial::generator(Ring ring, std::size_t index)
{
    GradedPolynomial p(std::move(ring));
    Monomial mono = Monomial::one(p.ring_->size());
    mono.exps.at(index) = 1;
    p.terms_.emplace(std::move(mono), Int(1));
    return p;
}

GradedPolynomial GradedPolynomial::generator(Ring ring, const GenName& name)
{
    auto idx = ring->index_of(name);
    if (!idx)
        throw std::invalid_argument("no such generator: " + print_name(name));
    return generator(std::move(ring), *idx);
}

GradedPolynomial GradedPolynomial::term(Ring ring, Monomial mono, Int coef)
{
    GradedPolynomial p(std::move(ring));
    if (mono.exps.size() != p.ring_->size())
        throw std::invalid_argument("monomial length does not match presentation");
    if (coef != 0)
        p.terms_.emplace(std::move(mono), std::move(coef));
    return p;
}

int GradedPolynomial::degree() const
{
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.degree(*ring_);
}

bool GradedPolynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int d = terms_.begin()->first.degree(*ring_);
    return terms_.rbegin()->first.degree(*ring_) == d;
}

GradedPolynomial GradedPolynomial::homogeneous_component(int d) const
{
    GradedPolynomial out(ring_);
    for (const auto& [mono, coef] : terms_)
        if (mono.degree(*ring_) == d)
            out.terms_.emplace(mono, coef);
    return out;
}

Int GradedPolynomial::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Int(0) : it->second;
}

void GradedPolynomial::add_term(const Monomial& mono, const Int& coef)
{
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.emplace(mono, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GradedPolynomial GradedPolynomial::operator-() const
{
    GradedPolynomial out(ring_);
    for (const auto& [mono, coef] : terms_)
        out.terms_.emplace(mono, -coef);
    return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs)
{
    check_same_ring(rhs);
    for (const auto& [mono, coef] : rhs.terms_)
        add_term(mono, coef);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs)
{
    check_same_ring(rhs);
    for (const auto& [mono, coef] : rhs.terms_)
        add_term(mono, -coef);
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& lhs, const GradedPolynomial& rhs)
{
    lhs.check_same_ring(rhs);
    GradedPolynomial out(lhs.ring_);
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const Int& scalar) const
{
    GradedPolynomial out(ring_);
    if (scalar == 0)
        return out;
    for (const auto& [mono, coef] : terms_)
        out.terms_.emplace(mono, coef * scalar);
    return out;
}

GradedPolynomial GradedPolynomial::pow(unsigned n) const
{
    GradedPolynomial result = constant(ring_, 1);
    GradedPolynomial base = *this;
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        n >>= 1u;
        if (n > 0)
            base = base * base;
    }
    return result;
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b)
{
    if (!same_ring(a.ring_, b.ring_))
        return false;
    if (a.terms_.size() != b.terms_.size())
        return false;
    return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

void GradedPolynomial::check_same_ring(const GradedPolynomial& other) const
{
    if (!same_ring(ring_, other.ring_))
        throw std::invalid_argument("presentation mismatch between polynomial operands");
}

namespace {

std::string monomial_str(const RingPresentation& ring, const Monomial& mono)
{
    std::string out;
    for (std::size_t i = 0; i < mono.exps.size(); ++i) {
        if (mono.exps[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        std::string name = print_name(ring.gen(i).name);
        if (mono.exps[i] == 1) {
            out += name;
        } else if (name.find('^') != std::string::npos) {
            out += "(" + name + ")^" + std::to_string(mono.exps[i]);
        } else {
            out += name + "^" + std::to_string(mono.exps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace

std::string GradedPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coef] : terms_) {
        Int mag = coef < 0 ? Int(-coef) : coef;
        if (first) {
            if (coef < 0)
                out << "-";
            first = false;
        } else {
            out << (coef < 0 ? " - " : " + ");
        }
        const std::string ms = monomial_str(*ring_, mono);
        if (mag != 1 || ms == "1") {
            out << mag.str();
            if (ms != "1")
                out << "*";
        }
        if (ms != "1")
            out << ms;
    }
    return out.str();
}

GradedPolynomial poly_arith(const GradedPolynomial& a, const GradedPolynomial& b, PolyOp op)
{
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("presentation mismatch");
    return op == PolyOp::add ? a + b : a * b;
}

namespace {

void enumerate_rec(const RingPresentation& ring, std::size_t i, int remaining, Monomial& cur,
                   std::vector<Monomial>& out)
{
    if (i == ring.size()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    const int d = ring.gen(i).degree;
    for (int e = 0; e * d <= remaining; ++e) {
        cur.exps[i] = static_cast<Exp>(e);
        enumerate_rec(ring, i + 1, remaining - e * d, cur, out);
    }
    cur.exps[i] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const Ring& ring, int d)
{
    std::vector<Monomial> out;
    if (d < 0 || d % 2 != 0)
        return out;
    if (d == 0) {
        out.push_back(Monomial::one(ring->size()));
        return out;
    }
    Monomial cur = Monomial::one(ring->size());
    enumerate_rec(*ring, 0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return GradedLexLess{ring.get()}(a, b); });
    return out;
}

Int monomial_count(const RingPresentation& ring, int d)
{
    if (d < 0 || d % 2 != 0)
        return 0;
    // coefficient extraction from prod 1/(1 - t^deg), degrees halved
    const int half = d / 2;
    std::vector<Int> dims(static_cast<std::size_t>(half) + 1, 0);
    dims[0] = 1;
    for (const GeneratorSpec& g : ring.gens()) {
        const int step = g.degree / 2;
        for (int t = step; t <= half; ++t)
            dims[static_cast<std::size_t>(t)] += dims[static_cast<std::size_t>(t - step)];
    }
    return dims.back();
}

}  // namespace instmod
