#pragma once

#include "extgr/permutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace extgr {

// Surjection from {1..m} onto {1..n}, stored as the value list
// values[i] = f(i+1). Totality of the image is enforced on construction.
struct Surjection {
    int m = 0;
    int n = 0;
    std::vector<int> values;

    Surjection() = default;
    Surjection(int m_, int n_, std::vector<int> vals) : m(m_), n(n_), values(std::move(vals))
    {
        if (m < 0 || n < 0) throw std::invalid_argument("negative ordinal size");
        if (static_cast<int>(values.size()) != m) throw std::invalid_argument("value list length != m");
        std::vector<char> hit(n, 0);
        for (int v : values) {
            if (v < 1 || v > n) throw std::invalid_argument("surjection value out of range");
            hit[v - 1] = 1;
        }
        for (char h : hit)
            if (!h) throw std::invalid_argument("map is not surjective");
    }

    int operator()(int x) const { return values[x - 1]; }

    std::vector<int> fiber(int k) const
    {
        std::vector<int> f;
        for (int x = 1; x <= m; ++x)
            if (values[x - 1] == k) f.push_back(x);
        return f;
    }

    std::vector<int> fiber_sizes() const
    {
        std::vector<int> s(n, 0);
        for (int v : values) ++s[v - 1];
        return s;
    }

    bool is_order_preserving() const { return std::is_sorted(values.begin(), values.end()); }
    bool is_bijection() const { return m == n; }

    Perm as_permutation() const
    {
        if (m != n) throw std::invalid_argument("not a bijection");
        return values;
    }

    static Surjection from_permutation(const Perm &p)
    {
        return {static_cast<int>(p.size()), static_cast<int>(p.size()), p};
    }

    static Surjection identity(int n) { return from_permutation(perm_identity(n)); }

    bool operator==(const Surjection &o) const { return m == o.m && n == o.n && values == o.values; }
    bool operator!=(const Surjection &o) const { return !(*this == o); }
    bool operator<(const Surjection &o) const
    {
        if (m != o.m) return m < o.m;
        if (n != o.n) return n < o.n;
        return values < o.values;
    }
};

// g ∘ f as functions: (g ∘ f)(x) = g(f(x))
inline Surjection compose(const Surjection &g, const Surjection &f)
{
    if (f.n != g.m) throw std::invalid_argument("surjections not composable");
    std::vector<int> vals(f.m);
    for (int x = 1; x <= f.m; ++x) vals[x - 1] = g(f(x));
    return {f.m, g.n, std::move(vals)};
}

// All surjections {1..m} -> {1..n} in lexicographic order of value lists.
// Count is n! * S(m, n); empty when m < n.
inline std::vector<Surjection> enumerate_surjections(int m, int n)
{
    std::vector<Surjection> out;
    if (m < 0 || n < 0 || m < n) return out;
    if (n == 0) {
        if (m == 0) out.emplace_back(0, 0, std::vector<int>{});
        return out;
    }
    std::vector<int> vals(m, 1);
    std::vector<int> count(n, 0);
    auto rec = [&](auto &&self, int pos, int missing) -> void {
        if (m - pos < missing) return; // cannot cover the rest
        if (pos == m) {
            out.emplace_back(m, n, vals);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            vals[pos] = v;
            int miss = missing - (count[v - 1] == 0 ? 1 : 0);
            ++count[v - 1];
            self(self, pos + 1, miss);
            --count[v - 1];
        }
    };
    rec(rec, 0, n);
    return out;
}

// Unique factorization f = s ∘ alpha with s order preserving and alpha the
// inverse of a shuffle: alpha maps the fiber f^{-1}(k) onto the k-th
// consecutive block, preserving order within each fiber.
struct ShuffleDecomposition {
    Surjection s; // order-preserving, same fiber sizes as f
    Perm alpha;   // permutation of {1..m}
};

inline ShuffleDecomposition canonical_decomposition(const Surjection &f)
{
    std::vector<int> sorted = f.values;
    std::sort(sorted.begin(), sorted.end());
    Surjection s(f.m, f.n, std::move(sorted));

    Perm alpha(f.m);
    std::vector<int> offset(f.n + 1, 0);
    for (int v : f.values) ++offset[v]; // sizes at offset[1..n]
    int acc = 0;
    for (int k = 1; k <= f.n; ++k) {
        int size = offset[k];
        offset[k] = acc;
        acc += size;
    }
    for (int x = 1; x <= f.m; ++x) {
        int k = f(x);
        alpha[x - 1] = ++offset[k]; // next free slot in block k (1-based)
    }
    return {std::move(s), std::move(alpha)};
}

// Sign of a bijection between ordered sets A -> B: compose with the inverse
// of the unique order-preserving bijection and take the sign of the induced
// permutation of B.
inline int bar_sign(const std::vector<int> &domain, const std::vector<int> &images)
{
    if (domain.size() != images.size()) throw std::invalid_argument("bar_sign: size mismatch");
    const int n = static_cast<int>(domain.size());
    std::vector<int> sorted_images = images;
    std::sort(sorted_images.begin(), sorted_images.end());
    for (size_t i = 0; i + 1 < sorted_images.size(); ++i)
        if (sorted_images[i] == sorted_images[i + 1]) throw std::invalid_argument("bar_sign: not a bijection");
    if (!std::is_sorted(domain.begin(), domain.end()))
        throw std::invalid_argument("bar_sign: domain must be listed in its natural order");
    // permutation pi with pi(i) = rank of images[i] in B
    Perm pi(n);
    for (int i = 0; i < n; ++i) {
        auto it = std::lower_bound(sorted_images.begin(), sorted_images.end(), images[i]);
        pi[i] = static_cast<int>(it - sorted_images.begin()) + 1;
    }
    return perm_sign(pi);
}

} // namespace extgr
