#pragma once

#include "extgr/integer_matrix.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace extgr {

// A word in a free group of rank q: sequence of signed generator indices,
// +g meaning x_g and -g meaning x_g^{-1}, with g in 1..q. Kept reduced.
using Word = std::vector<int>;

inline Word reduce_word(Word w)
{
    Word out;
    for (int g : w) {
        if (g == 0) throw std::invalid_argument("generator index 0 is not a letter");
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

inline Word inverse_word(const Word &w)
{
    Word out(w.rbegin(), w.rend());
    for (int &g : out) g = -g;
    return out;
}

// Homomorphism between finitely generated free groups, given by the images
// of the source generators as reduced words in the target generators.
struct FreeGroupHom {
    int source_rank = 0;
    int target_rank = 0;
    std::vector<Word> words; // words[i] = image of source generator i+1

    FreeGroupHom() = default;
    FreeGroupHom(int src, int tgt, std::vector<Word> ws)
        : source_rank(src), target_rank(tgt), words(std::move(ws))
    {
        if (src < 0 || tgt < 0) throw std::invalid_argument("negative free group rank");
        if (static_cast<int>(words.size()) != src)
            throw std::invalid_argument("need one word per source generator");
        for (auto &w : words) {
            w = reduce_word(w);
            for (int g : w)
                if (std::abs(g) < 1 || std::abs(g) > tgt)
                    throw std::invalid_argument("generator index outside target rank");
        }
    }

    static FreeGroupHom identity(int rank)
    {
        std::vector<Word> ws(rank);
        for (int i = 0; i < rank; ++i) ws[i] = {i + 1};
        return {rank, rank, std::move(ws)};
    }

    // image of an arbitrary word under this homomorphism
    Word apply(const Word &w) const
    {
        Word out;
        for (int g : w) {
            const Word &img = words[std::abs(g) - 1];
            if (g > 0)
                out.insert(out.end(), img.begin(), img.end());
            else {
                Word inv = inverse_word(img);
                out.insert(out.end(), inv.begin(), inv.end());
            }
        }
        return reduce_word(out);
    }

    bool operator==(const FreeGroupHom &o) const
    {
        return source_rank == o.source_rank && target_rank == o.target_rank && words == o.words;
    }
    bool operator!=(const FreeGroupHom &o) const { return !(*this == o); }
};

// second ∘ first, as functions (apply `first`, then `second`)
inline FreeGroupHom compose(const FreeGroupHom &second, const FreeGroupHom &first)
{
    if (first.target_rank != second.source_rank)
        throw std::invalid_argument("free group homs not composable");
    std::vector<Word> ws(first.source_rank);
    for (int i = 0; i < first.source_rank; ++i) ws[i] = second.apply(first.words[i]);
    return {first.source_rank, second.target_rank, std::move(ws)};
}

// The abelianization functor on morphisms: entry (r, c) is the exponent sum
// of target generator r+1 in the image word of source generator c+1.
inline IntegerMatrix abelianization_matrix(const FreeGroupHom &h)
{
    IntegerMatrix m(h.target_rank, h.source_rank);
    for (int c = 0; c < h.source_rank; ++c)
        for (int g : h.words[c]) m.add(std::abs(g) - 1, c, g > 0 ? 1 : -1);
    return m;
}

} // namespace extgr
