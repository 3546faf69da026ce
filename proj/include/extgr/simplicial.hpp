#pragma once

#include "extgr/free_group.hpp"

#include <stdexcept>

namespace extgr {

// Structure maps of the simplicial object of representable functors on free
// groups, written as the free-group homomorphisms that induce them. The
// i-th face at level k is a homomorphism Z^{*k} -> Z^{*(k+1)}:
//   i = 0:        y_j -> x_{j+1}
//   1 <= i <= k:  y_j -> x_j (j < i),  y_i -> x_i x_{i+1},  y_j -> x_{j+1} (j > i)
//   i = k + 1:    y_j -> x_j
inline FreeGroupHom face_hom(int i, int k)
{
    if (k < 0 || i < 0 || i > k + 1) throw std::out_of_range("face index out of range");
    std::vector<Word> ws(k);
    for (int j = 1; j <= k; ++j) {
        Word w;
        if (i == 0)
            w = {j + 1};
        else if (i == k + 1)
            w = {j};
        else if (j < i)
            w = {j};
        else if (j == i)
            w = {i, i + 1};
        else
            w = {j + 1};
        ws[j - 1] = std::move(w);
    }
    return {k, k + 1, std::move(ws)};
}

// The i-th degeneracy at level k is a homomorphism Z^{*(k+1)} -> Z^{*k}
// (1 <= i <= k+1): y_j -> x_j (j < i), y_i -> 1, y_j -> x_{j-1} (j > i).
inline FreeGroupHom degeneracy_hom(int i, int k)
{
    if (k < 0 || i < 1 || i > k + 1) throw std::out_of_range("degeneracy index out of range");
    std::vector<Word> ws(k + 1);
    for (int j = 1; j <= k + 1; ++j) {
        Word w;
        if (j < i)
            w = {j};
        else if (j == i)
            w = {};
        else
            w = {j - 1};
        ws[j - 1] = std::move(w);
    }
    return {k + 1, k, std::move(ws)};
}

} // namespace extgr
