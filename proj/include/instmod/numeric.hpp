#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace instmod {

/// Exact arbitrary-precision integer used for all ring coefficients.
using Int = boost::multiprecision::cpp_int;
/// Exact rational, used inside elimination routines.
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::lcm(a, b);
}

/// gcd of all entries, 0 for the zero vector.
inline Int content(const std::vector<Int>& v)
{
    Int g = 0;
    for (const Int& x : v) {
        g = gcd_int(g, x);
        if (g == 1)
            break;
    }
    return g;
}

}  // namespace instmod
