#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extgr/serialization.hpp"

#include <random>

using namespace extgr;

TEST_CASE("integer matrix round trip, including big values")
{
    IntegerMatrix m(3, 4);
    m.set(0, 1, 5);
    m.set(2, 3, Int("-123456789012345678901234567890"));
    m.set(1, 0, -7);
    auto j = to_json(m);
    auto back = integer_matrix_from_json(j);
    CHECK(back == m);
    CHECK(j.at("entries").size() == 3);
}

TEST_CASE("signed sums round trip with deterministic term order")
{
    SignedSurjSum s(3, 2);
    for (const auto &f : enumerate_surjections(3, 2)) s.add(f, Int(1) - 2 * (f.values[0] % 2));
    auto j = to_json(s);
    auto back = signed_sum_from_json(j);
    CHECK(back == s);
    CHECK(to_json(back) == j);
    CHECK(j.at("degree").get<int>() == 1);
}

TEST_CASE("property: random signed sums round trip")
{
    std::mt19937_64 rng(4242);
    auto basis = enumerate_surjections(4, 2);
    for (int trial = 0; trial < 50; ++trial) {
        SignedSurjSum s(4, 2);
        for (const auto &f : basis)
            if (rng() % 3 == 0) s.add(f, static_cast<long>(rng() % 19) - 9);
        CHECK(signed_sum_from_json(to_json(s)) == s);
    }
}

TEST_CASE("surjection from bare array")
{
    auto f = surjection_from_json(nlohmann::json::parse("[2,1,2]"));
    CHECK(f.m == 3);
    CHECK(f.n == 2);
    CHECK_THROWS(surjection_from_json(nlohmann::json::parse("[3,1]"))); // not surjective
}

TEST_CASE("abelian group serialization")
{
    FgAbelianGroup g(2, {Int(2), Int(4)});
    auto j = to_json(g);
    CHECK(j.at("free_rank").get<long>() == 2);
    CHECK(j.at("torsion").size() == 2);
}
