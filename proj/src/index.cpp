#include "instmod/index.hpp"

#include <stdexcept>

namespace instmod {

SpinCClass::SpinCClass(std::vector<std::int64_t> entries) : c(std::move(entries))
{
    for (std::int64_t v : c)
        if (v % 2 == 0)
            throw std::invalid_argument("SpinCClass: entries must be odd (w2 = (1,...,1) mod 2)");
}

IndexProblem::IndexProblem(int q_, std::int64_t k_, int r_, std::vector<std::int64_t> c1E_, SpinCClass c_)
    : q(q_), k(k_), r(r_), c1E(std::move(c1E_)), c(std::move(c_))
{
    if (q < 0 || k < 1 || r < 2)
        throw std::invalid_argument("IndexProblem: need q >= 0, k >= 1, r >= 2");
    if (c1E.empty())
        c1E.assign(static_cast<std::size_t>(q), 0);
    if (c1E.size() != static_cast<std::size_t>(q) || c.q() != static_cast<std::size_t>(q))
        throw std::invalid_argument("IndexProblem: vector lengths must equal q");
}

std::int64_t intersection(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("intersection: length mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += u[i] * v[i];
    return s;
}

std::vector<SpinCClass> enumerate_spinc(int q)
{
    if (q < 0)
        throw std::invalid_argument("enumerate_spinc: q >= 0 required");
    std::vector<SpinCClass> out;
    out.reserve(1u << q);
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << q); ++bits) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i)
            c[static_cast<std::size_t>(i)] = (bits >> (q - 1 - i)) & 1u ? -1 : 1;
        out.emplace_back(std::move(c));
    }
    return out;
}

std::int64_t dirac_index(const IndexProblem& p)
{
    const std::int64_t quad = intersection(p.c1E, p.c1E) + intersection(p.c1E, p.c.c);
    if (quad % 2 != 0)
        throw std::domain_error("dirac_index: c1(E).(c1(E)+c) is odd; malformed Spin^c data");
    const std::int64_t csq = intersection(p.c.c, p.c.c) - p.q;
    if ((p.r * csq) % 8 != 0)
        throw std::domain_error("dirac_index: r (c.c - q) not divisible by 8; malformed Spin^c data");
    return p.k + quad / 2 + (p.r * csq) / 8;
}

std::vector<SpinCClass> chosen_classes(int q)
{
    if (q < 0)
        throw std::invalid_argument("chosen_classes: q >= 0 required");
    std::vector<SpinCClass> out;
    out.emplace_back(std::vector<std::int64_t>(static_cast<std::size_t>(q), 1));
    for (int l = 1; l <= q; ++l) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(q), 1);
        c[static_cast<std::size_t>(l - 1)] = -1;
        out.emplace_back(std::move(c));
    }
    return out;
}

int coupled_line_index(const SpinCClass& c, int slot, int sign)
{
    if (slot < 1 || static_cast<std::size_t>(slot) > c.q())
        throw std::out_of_range("coupled_line_index: slot out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("coupled_line_index: sign must be +1 or -1");
    return sign * c.c[static_cast<std::size_t>(slot - 1)] == 1 ? 1 : 0;
}

}  // namespace instmod
