#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace extgr {

// Permutation of {1..n} stored as the image list: p[i] = sigma(i+1).
using Perm = std::vector<int>;

inline Perm perm_identity(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline bool is_permutation(const Perm &p)
{
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
        seen[v - 1] = 1;
    }
    return true;
}

inline int perm_apply(const Perm &p, int x) { return p[x - 1]; }

// (a ∘ b)(x) = a(b(x))
inline Perm perm_compose(const Perm &a, const Perm &b)
{
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

inline Perm perm_inverse(const Perm &p)
{
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

inline int perm_sign(const Perm &p)
{
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

inline Perm transposition(int n, int k, int l)
{
    if (k < 1 || l < 1 || k > n || l > n || k == l) throw std::invalid_argument("bad transposition");
    Perm p = perm_identity(n);
    std::swap(p[k - 1], p[l - 1]);
    return p;
}

// Koszul sign of permuting graded symbols with degrees d by sigma:
// product of (-1)^{d_i d_j} over inversions (i < j, sigma(i) > sigma(j)).
inline int koszul_sign(const Perm &sigma, const std::vector<long> &degrees)
{
    if (sigma.size() != degrees.size()) throw std::invalid_argument("koszul sign size mismatch");
    int s = 1;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j] && (degrees[i] & 1) && (degrees[j] & 1)) s = -s;
    return s;
}

inline std::vector<Perm> all_permutations(int n)
{
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// decomposition into adjacent transpositions (k, k+1), applied left to right:
// sigma = t_1 ∘ t_2 ∘ ... ∘ t_r with each t composed on the left
inline std::vector<int> adjacent_decomposition(const Perm &sigma)
{
    // bubble-sort the image list; each swap records an adjacent transposition
    Perm w = sigma;
    std::vector<int> swaps; // positions k meaning transposition (k, k+1)
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                swaps.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
    }
    // sigma = t_{r} ... t_1 applied to identity from the left; reverse for
    // the conventional product sigma = t_1' ∘ ... ∘ t_r'
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

// disjoint cycle representation (fixed points omitted, cycles sorted by
// smallest element, each rotated to start at its smallest element)
inline std::vector<std::vector<int>> cycle_notation(const Perm &p)
{
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(p.size(), 0);
    for (int start = 1; start <= static_cast<int>(p.size()); ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[x - 1] = 1;
            cyc.push_back(x);
            x = p[x - 1];
        } while (x != start);
        if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

inline Perm perm_from_cycles(int n, const std::vector<std::vector<int>> &cycles)
{
    Perm p = perm_identity(n);
    for (const auto &cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
            p[from - 1] = to;
        }
        std::vector<char> seen(n, 0);
        for (int v : cyc) {
            if (seen[v - 1]) throw std::invalid_argument("repeated entry in cycle");
            seen[v - 1] = 1;
        }
    }
    if (!is_permutation(p)) throw std::invalid_argument("cycles do not define a permutation");
    return p;
}

} // namespace extgr
