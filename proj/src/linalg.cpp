#include "instmod/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace instmod {

namespace {

void normalize_row(std::vector<Int>& row, std::size_t lead_col)
{
    Int g = content(row);
    if (g == 0)
        return;
    if (row[lead_col] < 0)
        g = -g;
    if (g != 1)
        for (Int& x : row)
            x /= g;
}

/// row_i := (f1 * row_i - f2 * row_r), then content-normalized at lead.
void combine_rows(std::vector<Int>& target, const std::vector<Int>& pivot_row, const Int& p, const Int& a)
{
    const Int g = gcd_int(p, a);
    const Int f1 = p / g;
    const Int f2 = a / g;
    for (std::size_t c = 0; c < target.size(); ++c)
        target[c] = f1 * target[c] - f2 * pivot_row[c];
}

std::size_t lead_of(const std::vector<Int>& row)
{
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0)
            return c;
    return row.size();
}

}  // namespace

std::size_t rref_int(IntMat& m, std::vector<std::size_t>* pivot_cols)
{
    if (pivot_cols)
        pivot_cols->clear();
    if (m.empty())
        return 0;
    const std::size_t ncols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t best = m.size();
        for (std::size_t i = rank; i < m.size(); ++i) {
            if (m[i][col] == 0)
                continue;
            if (best == m.size() || abs_int(m[i][col]) < abs_int(m[best][col]))
                best = i;
        }
        if (best == m.size())
            continue;
        std::swap(m[rank], m[best]);
        normalize_row(m[rank], col);
        const Int p = m[rank][col];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0)
                continue;
            combine_rows(m[i], m[rank], p, m[i][col]);
            const std::size_t lead = lead_of(m[i]);
            if (lead < ncols)
                normalize_row(m[i], lead);
        }
        if (pivot_cols)
            pivot_cols->push_back(col);
        ++rank;
    }
    m.resize(rank, std::vector<Int>(ncols, 0));
    return rank;
}

std::size_t rank_int(IntMat m) { return rref_int(m); }

IntMat nullspace_int(const IntMat& m)
{
    if (m.empty())
        return {};
    const std::size_t ncols = m[0].size();
    IntMat red = m;
    std::vector<std::size_t> pivots;
    const std::size_t rank = rref_int(red, &pivots);

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t pc : pivots)
        is_pivot[pc] = true;

    IntMat basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        Int scale = 1;
        for (std::size_t r = 0; r < rank; ++r)
            if (red[r][f] != 0)
                scale = lcm_int(scale, red[r][pivots[r]]);
        std::vector<Int> x(ncols, 0);
        x[f] = scale;
        for (std::size_t r = 0; r < rank; ++r)
            if (red[r][f] != 0)
                x[pivots[r]] = -red[r][f] * (scale / red[r][pivots[r]]);
        const Int g = content(x);
        if (g > 1)
            for (Int& v : x)
                v /= g;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& m, const std::vector<Int>& b)
{
    if (m.size() != b.size())
        throw std::invalid_argument("solve_rational: shape mismatch");
    if (m.empty())
        return std::vector<Rat>{};
    const std::size_t ncols = m[0].size();
    IntMat aug(m.size(), std::vector<Int>(ncols + 1));
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][ncols] = b[i];
    }
    std::vector<std::size_t> pivots;
    const std::size_t rank = rref_int(aug, &pivots);
    if (!pivots.empty() && pivots.back() == ncols)
        return std::nullopt;  // inconsistent
    std::vector<Rat> x(ncols, Rat(0));
    for (std::size_t r = 0; r < rank; ++r)
        x[pivots[r]] = Rat(aug[r][ncols], aug[r][pivots[r]]);
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b)
{
    if (m.size() != b.size())
        throw std::invalid_argument("solve_integer: shape mismatch");
    const std::size_t nrows = m.size();
    const std::size_t nvars = nrows == 0 ? 0 : m[0].size();

    // Row-echelon Hermite reduction of the transpose, tracking the
    // unimodular transform so solution coordinates can be recovered.
    IntMat t(nvars, std::vector<Int>(nrows));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < nvars; ++j)
            t[j][i] = m[i][j];
    IntMat u(nvars, std::vector<Int>(nvars, 0));
    for (std::size_t i = 0; i < nvars; ++i)
        u[i][i] = 1;

    std::vector<std::size_t> pivot_col;
    std::size_t ridx = 0;
    for (std::size_t col = 0; col < nrows && ridx < nvars; ++col) {
        while (true) {
            std::size_t best = nvars;
            for (std::size_t i = ridx; i < nvars; ++i) {
                if (t[i][col] == 0)
                    continue;
                if (best == nvars || abs_int(t[i][col]) < abs_int(t[best][col]))
                    best = i;
            }
            if (best == nvars)
                break;
            std::swap(t[ridx], t[best]);
            std::swap(u[ridx], u[best]);
            bool clean = true;
            for (std::size_t i = ridx + 1; i < nvars; ++i) {
                if (t[i][col] == 0)
                    continue;
                const Int q = t[i][col] / t[ridx][col];
                if (q != 0) {
                    for (std::size_t c = 0; c < nrows; ++c)
                        t[i][c] -= q * t[ridx][c];
                    for (std::size_t c = 0; c < nvars; ++c)
                        u[i][c] -= q * u[ridx][c];
                }
                if (t[i][col] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (t[ridx][col] != 0) {
            if (t[ridx][col] < 0) {
                for (Int& v : t[ridx])
                    v = -v;
                for (Int& v : u[ridx])
                    v = -v;
            }
            pivot_col.push_back(col);
            ++ridx;
        }
    }

    // Forward substitution against the echelon lattice basis.
    std::vector<Int> res = b;
    std::vector<Int> coef(ridx, 0);
    for (std::size_t r = 0; r < ridx; ++r) {
        const std::size_t pc = pivot_col[r];
        if (res[pc] % t[r][pc] != 0)
            return std::nullopt;
        const Int q = res[pc] / t[r][pc];
        coef[r] = q;
        if (q != 0)
            for (std::size_t c = 0; c < nrows; ++c)
                res[c] -= q * t[r][c];
    }
    for (const Int& v : res)
        if (v != 0)
            return std::nullopt;

    std::vector<Int> x(nvars, 0);
    for (std::size_t r = 0; r < ridx; ++r)
        if (coef[r] != 0)
            for (std::size_t j = 0; j < nvars; ++j)
                x[j] += coef[r] * u[r][j];
    return x;
}

std::vector<Int> smith_invariants(IntMat m)
{
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows == 0 ? 0 : m[0].size();
    std::vector<Int> inv;
    std::size_t t = 0;
    while (t < nrows && t < ncols) {
        // locate minimal nonzero entry in the trailing block
        std::size_t pr = nrows, pc = ncols;
        for (std::size_t i = t; i < nrows; ++i)
            for (std::size_t j = t; j < ncols; ++j)
                if (m[i][j] != 0 && (pr == nrows || abs_int(m[i][j]) < abs_int(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == nrows)
            break;
        std::swap(m[t], m[pr]);
        for (std::size_t i = 0; i < nrows; ++i)
            std::swap(m[i][t], m[i][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < nrows; ++i) {
                if (m[i][t] == 0)
                    continue;
                const Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < ncols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < ncols; ++j) {
                if (m[t][j] == 0)
                    continue;
                const Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < nrows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < nrows; ++i)
                        std::swap(m[i][t], m[i][j]);
                    dirty = true;
                }
            }
            if (!dirty) {
                // enforce divisibility of the trailing block
                for (std::size_t i = t + 1; i < nrows && !dirty; ++i)
                    for (std::size_t j = t + 1; j < ncols && !dirty; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t c = t; c < ncols; ++c)
                                m[t][c] += m[i][c];
                            dirty = true;
                        }
            }
        }
        if (m[t][t] < 0)
            for (std::size_t j = t; j < ncols; ++j)
                m[t][j] = -m[t][j];
        inv.push_back(m[t][t]);
        ++t;
    }
    return inv;
}

namespace {

/// target := (p * target - a * pivot) / content, merging sorted entries.
SparseRow sparse_combine(const SparseRow& target, const SparseRow& pivot, const Int& p, const Int& a)
{
    const Int g0 = gcd_int(p, a);
    const Int f1 = p / g0;
    const Int f2 = a / g0;
    SparseRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.emplace_back(target[i].first, f1 * target[i].second);
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, -f2 * pivot[j].second);
            ++j;
        } else {
            Int v = f1 * target[i].second - f2 * pivot[j].second;
            if (v != 0)
                out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    Int g = 0;
    for (const auto& [c, v] : out) {
        g = gcd_int(g, v);
        if (g == 1)
            break;
    }
    if (g > 1)
        for (auto& [c, v] : out)
            v /= g;
    return out;
}

}  // namespace

std::size_t rank_sparse(std::vector<SparseRow> rows, std::size_t ncols)
{
    // drop empties, dedupe exact duplicates
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }), rows.end());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const std::size_t n = rows.size();
    std::vector<std::vector<std::size_t>> col_rows(ncols);  // lazily maintained, may hold stale ids
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [c, v] : rows[i])
            col_rows[c].push_back(i);

    std::vector<char> eliminated(n, 0);  // became a pivot row

    // bucket queue keyed by row length at insertion time; lengths
    // revalidated on pop, cursor moves down when shorter rows appear
    std::vector<std::vector<std::size_t>> buckets;
    std::size_t cursor = 1;
    auto push_row = [&](std::size_t i) {
        const std::size_t len = rows[i].size();
        if (len == 0)
            return;
        if (buckets.size() <= len)
            buckets.resize(len + 1);
        buckets[len].push_back(i);
        if (len < cursor)
            cursor = len;
    };
    for (std::size_t i = 0; i < n; ++i)
        push_row(i);

    auto row_has = [&](std::size_t r, std::size_t c) {
        return std::binary_search(rows[r].begin(), rows[r].end(), std::make_pair(c, Int(0)),
                                  [](const auto& a, const auto& b) { return a.first < b.first; });
    };

    std::size_t rank = 0;
    while (true) {
        while (cursor < buckets.size() && buckets[cursor].empty())
            ++cursor;
        if (cursor >= buckets.size())
            break;
        const std::size_t pi = buckets[cursor].back();
        buckets[cursor].pop_back();
        if (eliminated[pi] || rows[pi].empty())
            continue;
        if (rows[pi].size() != cursor) {
            push_row(pi);  // stale entry, requeue at true length
            continue;
        }

        // pivot column: fewest other active rows
        std::size_t pcol = rows[pi][0].first;
        std::size_t best_count = SIZE_MAX;
        for (const auto& [c, v] : rows[pi]) {
            auto& lst = col_rows[c];
            lst.erase(std::remove_if(lst.begin(), lst.end(),
                                     [&](std::size_t r) {
                                         return eliminated[r] || rows[r].empty() || !row_has(r, c);
                                     }),
                      lst.end());
            std::sort(lst.begin(), lst.end());
            lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
            if (lst.size() < best_count) {
                best_count = lst.size();
                pcol = c;
            }
        }

        const Int p = [&] {
            for (const auto& [c, v] : rows[pi])
                if (c == pcol)
                    return v;
            return Int(0);
        }();
        eliminated[pi] = 1;
        ++rank;

        const std::vector<std::size_t> victims = col_rows[pcol];
        for (std::size_t ri : victims) {
            if (ri == pi || eliminated[ri] || rows[ri].empty())
                continue;
            auto it = std::lower_bound(rows[ri].begin(), rows[ri].end(), std::make_pair(pcol, Int(0)),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it == rows[ri].end() || it->first != pcol)
                continue;
            rows[ri] = sparse_combine(rows[ri], rows[pi], p, it->second);
            for (const auto& [c, v] : rows[ri])
                col_rows[c].push_back(ri);
            push_row(ri);
        }
        rows[pi].clear();
        rows[pi].shrink_to_fit();
    }
    return rank;
}

}  // namespace instmod
