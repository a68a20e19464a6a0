#pragma once

// Betti numbers of a relative cubical complex over F_p, from interval lists.
// Boundary signs and ranks are computed here from scratch.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Interval = std::pair<int, int>;
using CubeList = std::vector<std::vector<Interval>>;

inline long mod(long a, long p)
{
    return ((a % p) + p) % p;
}

inline long inverse_mod(long a, long p)
{
    for (long x = 1; x < p; ++x)
        if (mod(a * x, p) == 1)
            return x;
    return 0;
}

inline std::size_t rank_mod(std::vector<std::vector<long>> m, long p)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && mod(m[pivot][c], p) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        const long inv = inverse_mod(mod(m[rank][c], p), p);
        for (auto& x : m[rank])
            x = mod(x * inv, p);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && mod(m[r][c], p) != 0) {
                const long k = m[r][c];
                for (std::size_t j = 0; j < cols; ++j)
                    m[r][j] = mod(m[r][j] - k * m[rank][j], p);
            }
        ++rank;
    }
    return rank;
}

inline int cube_dim(const std::vector<Interval>& c)
{
    int d = 0;
    for (const auto& [a, b] : c)
        d += b - a;
    return d;
}

/// Betti numbers b_0..b_top of (X, Y) with F_p coefficients.
inline std::vector<std::size_t> relative_betti(const CubeList& x, const CubeList& y, long p)
{
    int top = -1;
    for (const auto& c : x)
        top = std::max(top, cube_dim(c));
    std::vector<std::map<std::vector<Interval>, std::size_t>> index(top + 2);
    for (const auto& c : x)
        if (std::find(y.begin(), y.end(), c) == y.end()) {
            auto& slot = index[cube_dim(c)];
            slot.emplace(c, slot.size());
        }
    std::vector<std::size_t> ranks(top + 2, 0);
    for (int n = 1; n <= top; ++n) {
        std::vector<std::vector<long>> d(index[n].size(), std::vector<long>(index[n - 1].size(), 0));
        for (const auto& [c, row] : index[n]) {
            int sign = 1;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i].first == c[i].second)
                    continue;
                for (int upper = 0; upper <= 1; ++upper) {
                    auto f = c;
                    f[i] = {c[i].first + upper, c[i].first + upper};
                    auto it = index[n - 1].find(f);
                    if (it != index[n - 1].end())
                        d[row][it->second] += upper ? sign : -sign;
                }
                sign = -sign;
            }
        }
        ranks[n] = rank_mod(d, p);
    }
    std::vector<std::size_t> betti;
    for (int n = 0; n <= top; ++n)
        betti.push_back(index[n].size() - ranks[n] - ranks[n + 1]);
    return betti;
}

} // namespace oracle
