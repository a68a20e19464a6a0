#pragma once

// Invariant factors from determinantal divisors: D_k is the gcd of all k x k
// minors and d_k = D_k / D_{k-1}. Minors are expanded by permutations, so
// nothing here shares code with the library reduction.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<long>>;

inline mpz_class permutation_determinant(const Grid& a, const std::vector<int>& rows,
                                         const std::vector<int>& cols)
{
    const int k = static_cast<int>(rows.size());
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    mpz_class total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (p[i] > p[j])
                    ++inversions;
        mpz_class term = inversions % 2 ? -1 : 1;
        for (int i = 0; i < k; ++i)
            term *= a[rows[i]][cols[p[i]]];
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline void subsets(int n, int k, std::vector<std::vector<int>>& out)
{
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > n)
        return;
    for (;;) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

/// Nonzero invariant factors of a, in divisibility order.
inline std::vector<mpz_class> invariant_factors(const Grid& a)
{
    const int r = static_cast<int>(a.size());
    const int c = r ? static_cast<int>(a[0].size()) : 0;
    std::vector<mpz_class> factors;
    mpz_class previous = 1;
    for (int k = 1; k <= std::min(r, c); ++k) {
        std::vector<std::vector<int>> rs, cs;
        subsets(r, k, rs);
        subsets(c, k, cs);
        mpz_class g = 0;
        for (const auto& rr : rs)
            for (const auto& cc : cs) {
                mpz_class m = permutation_determinant(a, rr, cc);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
            }
        if (g == 0)
            break;
        factors.push_back(g / previous);
        previous = g;
    }
    return factors;
}

} // namespace oracle
