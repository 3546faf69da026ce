#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extgr/surjection.hpp"
#include "extgr/surjection_prop.hpp"

using namespace extgr;

namespace {

// independent oracle: alpha^{-1} is a shuffle for the fiber profile iff it
// is increasing on each consecutive block of the given sizes
bool inverse_is_shuffle(const Perm &alpha, const std::vector<int> &sizes)
{
    Perm inv = perm_inverse(alpha);
    int pos = 0;
    for (int s : sizes) {
        for (int t = 1; t < s; ++t)
            if (inv[pos + t - 1] > inv[pos + t]) return false;
        pos += s;
    }
    return true;
}

} // namespace

TEST_CASE("enumeration counts and order")
{
    CHECK(enumerate_surjections(2, 1).size() == 1);
    CHECK(enumerate_surjections(3, 2).size() == 6);
    CHECK(enumerate_surjections(2, 3).empty());
    CHECK(enumerate_surjections(0, 0).size() == 1);
    CHECK(enumerate_surjections(4, 2).size() == 14);

    auto list = enumerate_surjections(3, 2);
    for (size_t i = 0; i + 1 < list.size(); ++i) CHECK(list[i] < list[i + 1]);
    CHECK(list.front().values == std::vector<int>{1, 1, 2});
    CHECK(list.back().values == std::vector<int>{2, 2, 1});
}

TEST_CASE("canonical decomposition of the worked example")
{
    Surjection f(3, 2, {2, 1, 2});
    auto [s, alpha] = canonical_decomposition(f);
    CHECK(s.values == std::vector<int>{1, 2, 2});
    CHECK(alpha == Perm{2, 1, 3});
    CHECK(compose(s, Surjection::from_permutation(alpha)) == f);
}

TEST_CASE("order-preserving f decomposes trivially; bijections fully")
{
    Surjection op(4, 2, {1, 1, 2, 2});
    auto d1 = canonical_decomposition(op);
    CHECK(d1.s == op);
    CHECK(d1.alpha == perm_identity(4));

    Surjection bij(3, 3, {3, 1, 2});
    auto d2 = canonical_decomposition(bij);
    CHECK(d2.s == Surjection::identity(3));
    CHECK(d2.alpha == bij.values);
}

TEST_CASE("decomposition exists uniquely: exhaustive search up to m = 6")
{
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= m; ++n)
            for (const auto &f : enumerate_surjections(m, n)) {
                auto dec = canonical_decomposition(f);
                auto sizes = f.fiber_sizes();
                CHECK(dec.s.is_order_preserving());
                CHECK(compose(dec.s, Surjection::from_permutation(dec.alpha)) == f);
                CHECK(inverse_is_shuffle(dec.alpha, sizes));
                // uniqueness by exhaustion over all permutations (small m)
                if (m <= 5) {
                    std::vector<int> sorted = f.values;
                    std::sort(sorted.begin(), sorted.end());
                    Surjection s_try(m, n, sorted);
                    int count = 0;
                    for (const auto &alpha : all_permutations(m))
                        if (compose(s_try, Surjection::from_permutation(alpha)) == f &&
                            inverse_is_shuffle(alpha, sizes))
                            ++count;
                    CHECK(count == 1);
                }
            }
}

TEST_CASE("bar sign")
{
    CHECK(bar_sign({1, 2, 3}, {4, 7, 9}) == 1); // order preserving
    CHECK(bar_sign({1, 2}, {5, 3}) == -1);      // swap
    CHECK(bar_sign({2, 5, 7}, {3, 1, 2}) == 1); // 3-cycle
    CHECK_THROWS(bar_sign({1, 2}, {3, 3}));     // not a bijection
}

TEST_CASE("right action worked examples")
{
    Surjection f(3, 2, {1, 2, 2});
    CHECK(right_action(f, perm_identity(3)) == SignedSurjSum::basis(f));
    // swap inside the size-2 fiber flips the sign and fixes f
    auto r = right_action(f, transposition(3, 2, 3));
    CHECK(r.coeff(f) == -1);
    // bijections always act with coefficient +1 (all fibers singletons)
    Surjection b(3, 3, {2, 3, 1});
    for (const auto &s : all_permutations(3)) {
        auto rb = right_action(b, s);
        REQUIRE(rb.terms().size() == 1);
        CHECK(rb.terms().begin()->second == 1);
    }
}

TEST_CASE("right action is a right group action (signs included), m <= 4")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n) {
            auto perms = all_permutations(m);
            for (const auto &f : enumerate_surjections(m, n))
                for (const auto &s : perms)
                    for (const auto &t : perms) {
                        auto lhs = right_action(f, perm_compose(s, t));
                        auto rhs = right_action(right_action(f, s), t);
                        CHECK(lhs == rhs);
                    }
        }
}

TEST_CASE("left action transposition signs")
{
    // fibers (1, 2): sign +1
    Surjection f12(3, 2, {1, 2, 2});
    CHECK(left_action(1, 2, f12).coeff(compose(Surjection(2, 2, {2, 1}), f12)) == 1);
    // fibers (2, 2): sign -1
    Surjection f22(4, 2, {1, 1, 2, 2});
    CHECK(left_action(1, 2, f22).coeff(compose(Surjection(2, 2, {2, 1}), f22)) == -1);
    // bijections: sign +1 for every transposition
    Surjection b(3, 3, {2, 1, 3});
    for (int k = 1; k <= 3; ++k)
        for (int l = k + 1; l <= 3; ++l) {
            auto r = left_action(k, l, b);
            CHECK(r.terms().begin()->second == 1);
        }
}

TEST_CASE("left action is decomposition independent and a group action")
{
    for (int n = 1; n <= 3; ++n)
        for (int m = n; m <= 5; ++m) {
            auto perms = all_permutations(n);
            for (const auto &f : enumerate_surjections(m, n)) {
                for (const auto &tau : perms) {
                    auto swaps = adjacent_decomposition(tau);
                    SignedSurjSum via_adjacent = SignedSurjSum::basis(f);
                    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
                        via_adjacent = left_action_general(transposition(n, *it, *it + 1), via_adjacent);
                    CHECK(via_adjacent == left_action_general(tau, f));

                    for (const auto &tau2 : perms) {
                        auto lhs = left_action_general(perm_compose(tau, tau2), f);
                        auto rhs = left_action_general(tau, left_action_general(tau2, f));
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
}

TEST_CASE("left and right actions commute (bimodule), small sizes")
{
    for (int n = 1; n <= 3; ++n)
        for (int m = n; m <= 4; ++m) {
            auto lp = all_permutations(n);
            auto rp = all_permutations(m);
            for (const auto &f : enumerate_surjections(m, n))
                for (const auto &tau : lp)
                    for (const auto &sig : rp) {
                        auto a = right_action(left_action_general(tau, f), sig);
                        auto b = left_action_general(tau, right_action(f, sig));
                        CHECK(a == b);
                    }
        }
}

TEST_CASE("adjacent decomposition reconstructs the permutation")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto &p : all_permutations(n)) {
            auto swaps = adjacent_decomposition(p);
            Perm prod = perm_identity(n);
            for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
                prod = perm_compose(transposition(n, *it, *it + 1), prod);
            CHECK(prod == p);
            CHECK(perm_sign(p) == (swaps.size() % 2 == 0 ? 1 : -1));
        }
}
