#pragma once

#include <numeric>
#include <vector>

#include "gcalc/chains.hpp"

namespace gcalc::test {

using Dense = std::vector<std::vector<Coeff>>;

inline Coeff det(Dense m)
{
    // fraction-free Bareiss elimination; exact for the small matrices used here
    const int n = static_cast<int>(m.size());
    Coeff sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// gcd of all k x k minors
inline Coeff minor_gcd(const Dense& m, int k)
{
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Coeff g = 0;
    for (const auto& r : rs)
        for (const auto& c : cs) {
            Dense sub(k, std::vector<Coeff>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub[i][j] = m[r[i]][c[j]];
            g = std::gcd(g, det(sub));
        }
    return g;
}

// invariant factors from determinantal divisors
inline std::vector<BigInt> factors_by_minors(const Dense& m)
{
    std::vector<BigInt> out;
    const int n = static_cast<int>(std::min(m.size(), m[0].size()));
    Coeff prev = 1;
    for (int k = 1; k <= n; ++k) {
        Coeff g = minor_gcd(m, k);
        if (g == 0)
            break;
        out.emplace_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace gcalc::test
