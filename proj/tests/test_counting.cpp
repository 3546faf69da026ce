#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extgr/counting.hpp"

#include <algorithm>
#include <vector>

using namespace extgr;

namespace {

// brute-force enumeration oracles

// set partitions of {0..m-1} into exactly n nonempty blocks
long count_set_partitions(int m, int n)
{
    if (m == 0) return n == 0 ? 1 : 0;
    long count = 0;
    std::vector<int> assign(m, 0);
    auto rec = [&](auto &&self, int pos, int used) -> void {
        if (pos == m) {
            if (used == n) ++count;
            return;
        }
        for (int b = 0; b <= used && b < n; ++b) {
            assign[pos] = b;
            self(self, pos + 1, used + (b == used ? 1 : 0));
        }
    };
    rec(rec, 0, 0);
    return count;
}

// partitions of m into exactly n positive nonincreasing parts
long count_partitions(int m, int n, int max_part)
{
    if (n == 0) return m == 0 ? 1 : 0;
    long count = 0;
    for (int p = std::min(m, max_part); p >= 1; --p) count += count_partitions(m - p, n - 1, p);
    return count;
}

// compositions of m into exactly n positive parts
long count_compositions(int m, int n)
{
    if (n == 0) return m == 0 ? 1 : 0;
    long count = 0;
    for (int p = 1; p <= m; ++p) count += count_compositions(m - p, n - 1);
    return count;
}

} // namespace

TEST_CASE("worked values")
{
    CHECK(stirling2(3, 2) == 3);
    CHECK(partitions_into_parts(3, 2) == 1);
    CHECK(compositions_count(3, 2) == 2);
    CHECK(bell(3) == 5);
    CHECK(partitions_count(4) == 5);
    CHECK(stirling2(0, 0) == 1);
    CHECK(partitions_into_parts(0, 0) == 1);
    CHECK(compositions_count(0, 0) == 1);
    CHECK(bell(0) == 1);
}

TEST_CASE("counting functions agree with enumeration oracles up to 8")
{
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            CHECK(stirling2(m, n) == count_set_partitions(m, n));
            CHECK(partitions_into_parts(m, n) == count_partitions(m, n, m == 0 ? 1 : m));
            CHECK(compositions_count(m, n) == count_compositions(m, n));
        }
}

TEST_CASE("bell numbers sum the stirling row")
{
    for (int d = 0; d <= 8; ++d) {
        Int total = 0;
        for (int l = 0; l <= d; ++l) total += stirling2(d, l);
        CHECK(bell(d) == total);
    }
}

TEST_CASE("partition count sums partitions into parts")
{
    for (int d = 0; d <= 8; ++d) {
        Int total = 0;
        for (int n = 0; n <= d; ++n) total += partitions_into_parts(d, n);
        CHECK(partitions_count(d) == total);
    }
}

TEST_CASE("compositions are binomials")
{
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n) CHECK(compositions_count(m, n) == binomial(m - 1, n - 1));
}
