#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extgr/free_group.hpp"
#include "extgr/simplicial.hpp"

using namespace extgr;

TEST_CASE("word reduction")
{
    CHECK(reduce_word({1, -1}) == Word{});
    CHECK(reduce_word({1, 2, -2, -1}) == Word{});
    CHECK(reduce_word({1, 2, -2, 1}) == Word{1, 1});
    CHECK(reduce_word({-3, 3, 2}) == Word{2});
}

TEST_CASE("hom application and composition")
{
    // y1 -> x1 x2, y2 -> x2^{-1}
    FreeGroupHom h(2, 2, {{1, 2}, {-2}});
    CHECK(h.apply({1, 2}) == Word{1});
    FreeGroupHom id2 = FreeGroupHom::identity(2);
    CHECK(compose(id2, h) == h);
    CHECK(compose(h, id2) == h);
}

TEST_CASE("abelianization matrices of the examples")
{
    FreeGroupHom h(1, 2, {{1, 2}});
    auto a = abelianization_matrix(h);
    CHECK(a.get(0, 0) == 1);
    CHECK(a.get(1, 0) == 1);

    CHECK(abelianization_matrix(FreeGroupHom::identity(3)) == IntegerMatrix::identity(3));

    FreeGroupHom cancel(1, 2, {{1, 2, -1}});
    auto ac = abelianization_matrix(cancel);
    CHECK(ac.get(0, 0) == 0);
    CHECK(ac.get(1, 0) == 1);
}

TEST_CASE("face homomorphisms at level 1")
{
    auto f0 = face_hom(0, 1);
    CHECK(f0.words == std::vector<Word>{{2}});
    auto f1 = face_hom(1, 1);
    CHECK(f1.words == std::vector<Word>{{1, 2}});
    auto f2 = face_hom(2, 1);
    CHECK(f2.words == std::vector<Word>{{1}});
    CHECK_THROWS(face_hom(3, 1));
    CHECK_THROWS(face_hom(-1, 1));
}

TEST_CASE("degeneracy homomorphisms at level 1")
{
    auto e1 = degeneracy_hom(1, 1);
    CHECK(e1.words == std::vector<Word>{{}, {1}});
    auto e2 = degeneracy_hom(2, 1);
    CHECK(e2.words == std::vector<Word>{{1}, {}});
    CHECK_THROWS(degeneracy_hom(0, 1));
    CHECK_THROWS(degeneracy_hom(3, 1));
}

TEST_CASE("face then degeneracy is the identity (simplicial identity)")
{
    // apply face_hom(1,1) then degeneracy_hom(1,1): identity on rank 1
    auto comp = compose(degeneracy_hom(1, 1), face_hom(1, 1));
    CHECK(comp == FreeGroupHom::identity(1));
}

// The simplicial identities, written through the representing free-group
// homomorphisms (composition order flips through the Yoneda embedding):
//   d_i d_j = d_{j-1} d_i (i < j)  <=>  h_{j,k+1} ∘ h_{i,k} = h_{i,k+1} ∘ h_{j-1,k}
TEST_CASE("simplicial identities for faces up to level 6")
{
    for (int k = 0; k <= 5; ++k) {
        for (int j = 0; j <= k + 2; ++j)
            for (int i = 0; i < j; ++i) {
                auto lhs = compose(face_hom(j, k + 1), face_hom(i, k));
                auto rhs = compose(face_hom(i, k + 1), face_hom(j - 1, k));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("simplicial identities mixing faces and degeneracies up to level 6")
{
    // s_i s_j = s_{j+1} s_i (i <= j)  <=>  e_{i,k+1} ∘ e_{j,k} reversed through P(-):
    //   P(e_{j,k}) ∘ P(e_{i,k+1}) = ...  i.e. e_{i,k+1} then e_{j,k}
    for (int k = 0; k <= 4; ++k)
        for (int j = 1; j <= k + 1; ++j)
            for (int i = 1; i <= j; ++i) {
                auto lhs = compose(degeneracy_hom(j, k), degeneracy_hom(i, k + 1));
                auto rhs = compose(degeneracy_hom(i, k), degeneracy_hom(j + 1, k + 1));
                CHECK(lhs == rhs);
            }

    // face-degeneracy relations (degeneracies are 1-based): the composite
    // through P_{k+2} is the identity when i is j-1 or j, and otherwise
    // slides past with the index shifted
    for (int k = 0; k <= 4; ++k)
        for (int j = 1; j <= k + 2; ++j)
            for (int i = 0; i <= k + 2; ++i) {
                auto comp = compose(degeneracy_hom(j, k + 1), face_hom(i, k + 1));
                if (i == j - 1 || i == j) {
                    CHECK(comp == FreeGroupHom::identity(k + 1));
                } else if (i < j - 1) {
                    auto rhs = compose(face_hom(i, k), degeneracy_hom(j - 1, k));
                    CHECK(comp == rhs);
                } else { // i > j
                    auto rhs = compose(face_hom(i - 1, k), degeneracy_hom(j, k));
                    CHECK(comp == rhs);
                }
            }
}
