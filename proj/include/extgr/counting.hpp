#pragma once

#include "extgr/arith.hpp"

#include <stdexcept>
#include <vector>

namespace extgr {

// Stirling partition number S(m, n): partitions of an m-set into n
// nonempty blocks. S(0,0) = 1.
inline Int stirling2(int m, int n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("stirling2: negative argument");
    if (m == 0 && n == 0) return 1;
    if (m == 0 || n == 0 || n > m) return 0;
    std::vector<std::vector<Int>> s(m + 1, std::vector<Int>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= std::min(i, n); ++j) s[i][j] = Int(j) * s[i - 1][j] + s[i - 1][j - 1];
    return s[m][n];
}

// Number of partitions of m into exactly n parts (unordered, positive).
inline Int partitions_into_parts(int m, int n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("partitions_into_parts: negative argument");
    if (m == 0 && n == 0) return 1;
    if (m == 0 || n == 0 || n > m) return 0;
    // rho(m, n) = rho(m-1, n-1) + rho(m-n, n)
    std::vector<std::vector<Int>> r(m + 1, std::vector<Int>(n + 1, 0));
    r[0][0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= std::min(i, n); ++j) {
            r[i][j] = r[i - 1][j - 1];
            if (i - j >= 0) r[i][j] += r[i - j][j];
        }
    return r[m][n];
}

// Number of ordered partitions (compositions) of m into n positive parts:
// binomial(m-1, n-1), with r(0,0) = 1.
inline Int compositions_count(int m, int n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("compositions_count: negative argument");
    if (m == 0 && n == 0) return 1;
    return binomial(m - 1, n - 1);
}

// Number of partitions of m into exactly n pairwise distinct positive parts.
inline Int partitions_into_distinct_parts(int m, int n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("partitions_into_distinct_parts: negative argument");
    // subtract the staircase 0,1,...,n-1 to reduce to ordinary partitions
    long staircase = static_cast<long>(n) * (n - 1) / 2;
    if (m < staircase) return 0;
    return partitions_into_parts(m - static_cast<int>(staircase), n);
}

// Bell number B(d) = sum_n S(d, n).
inline Int bell(int d)
{
    if (d < 0) throw std::invalid_argument("bell: negative argument");
    Int b = 0;
    for (int n = 0; n <= d; ++n) b += stirling2(d, n);
    return b;
}

// Number of partitions of d (into any number of parts).
inline Int partitions_count(int d)
{
    if (d < 0) throw std::invalid_argument("partitions_count: negative argument");
    Int p = 0;
    for (int n = 0; n <= d; ++n) p += partitions_into_parts(d, n);
    return p;
}

} // namespace extgr
