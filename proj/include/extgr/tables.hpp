#pragma once

#include "extgr/coinvariants.hpp"
#include "extgr/counting.hpp"
#include "extgr/permutation.hpp"
#include "extgr/surjection_prop.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace extgr {

enum class PowerKind { Tensor, Symmetric, Exterior };

struct FunctorKind {
    PowerKind kind = PowerKind::Tensor;
    int exponent = 0;

    std::string to_string() const
    {
        const char *letter = kind == PowerKind::Tensor ? "T" : (kind == PowerKind::Symmetric ? "S" : "L");
        return std::string(letter) + "^" + std::to_string(exponent);
    }
};

inline FunctorKind parse_functor_kind(const std::string &text)
{
    if (text.size() < 3 || text[1] != '^') throw std::invalid_argument("functor spec must look like T^2, S^3, L^1");
    PowerKind k;
    switch (text[0]) {
    case 'T': case 't': k = PowerKind::Tensor; break;
    case 'S': case 's': k = PowerKind::Symmetric; break;
    case 'L': case 'l': k = PowerKind::Exterior; break;
    default: throw std::invalid_argument("functor kind must be T, S or L");
    }
    int e = std::stoi(text.substr(2));
    if (e < 0) throw std::invalid_argument("functor exponent must be nonnegative");
    return {k, e};
}

struct ExtTableEntry {
    FunctorKind source;
    FunctorKind target;
    long degree = 0;   // the single degree where the space can be nonzero
    long dimension = 0;
};

// The signed action of S_n x S_m on Q[Surj(m,n)] underlying the Ext group
// between source kind F^n and target kind G^m: the plain tensor-calculus
// signs, twisted by the signature for each exterior-power side.
inline SignedGroupAction ext_coinvariant_action(const FunctorKind &src, const FunctorKind &tgt)
{
    SignedGroupAction a;
    a.n = src.exponent;
    a.m = tgt.exponent;
    a.carrier = enumerate_surjections(tgt.exponent, src.exponent);

    const bool left = src.kind != PowerKind::Tensor;
    const bool right = tgt.kind != PowerKind::Tensor;
    if (left && right)
        a.group = SignedGroupAction::Group::FullProduct;
    else if (left)
        a.group = SignedGroupAction::Group::LeftFactor;
    else if (right)
        a.group = SignedGroupAction::Group::RightFactor;
    else
        a.group = SignedGroupAction::Group::Trivial;

    const bool src_sign = src.kind == PowerKind::Exterior;
    const bool tgt_sign = tgt.kind == PowerKind::Exterior;
    a.alpha = [src_sign, tgt_sign](const Perm &l, const Perm &r, const Surjection &f) -> int {
        SignedSurjSum moved = right_action(f, perm_inverse(r));
        const auto &[f1, c1] = *moved.terms().begin();
        SignedSurjSum moved2 = left_action_general(l, f1);
        const auto &[f2, c2] = *moved2.terms().begin();
        int sign = (c1 * c2 < 0) ? -1 : 1;
        if (src_sign) sign *= perm_sign(l);
        if (tgt_sign) sign *= perm_sign(r);
        return sign;
    };
    return a;
}

// dimension of Ext^{m-n}((F^n ∘ a) ⊗ Q, (G^m ∘ a) ⊗ Q), computed as signed
// coinvariants of Q[Surj(m, n)]
inline ExtTableEntry rational_ext(const FunctorKind &src, const FunctorKind &tgt)
{
    ExtTableEntry e;
    e.source = src;
    e.target = tgt;
    e.degree = tgt.exponent - src.exponent;
    if (e.degree < 0) {
        e.dimension = 0;
        return e;
    }
    SignedGroupAction a = ext_coinvariant_action(src, tgt);
    e.dimension = coinvariants_dimension(a);
    return e;
}

// the closed forms the coinvariant computation must reproduce
inline ExtTableEntry rational_ext_closed_form(const FunctorKind &src, const FunctorKind &tgt)
{
    const int n = src.exponent, m = tgt.exponent;
    ExtTableEntry e;
    e.source = src;
    e.target = tgt;
    e.degree = m - n;
    auto dim = [&]() -> Int {
        using K = PowerKind;
        switch (src.kind) {
        case K::Exterior:
            if (tgt.kind == K::Exterior) return partitions_into_parts(m, n);
            if (tgt.kind == K::Symmetric) return (n == m && n <= 1) ? 1 : 0;
            return stirling2(m, n);
        case K::Symmetric:
            // partitions of m into n pairwise distinct parts; 1 when n <= 1
            if (tgt.kind == K::Exterior) return partitions_into_distinct_parts(m, n);
            if (tgt.kind == K::Symmetric) return n == m ? 1 : 0;
            return stirling2(m, n);
        case K::Tensor:
        default:
            if (tgt.kind == K::Exterior) return compositions_count(m, n);
            if (tgt.kind == K::Symmetric) return n == m ? compositions_count(m, n) : 0;
            return factorial(n) * stirling2(m, n); // |Surj(m,n)|
        }
    }();
    if (e.degree < 0) dim = 0;
    e.dimension = dim.get_si();
    return e;
}

// Tor table: by the duality between Tor against a functor and Ext into its
// dual, the dimensions mirror the Ext table (sources and targets swap roles
// through the dualization, which preserves the kind and the exponent).
inline ExtTableEntry rational_tor(const FunctorKind &src, const FunctorKind &tgt)
{
    ExtTableEntry e = rational_ext(tgt, src);
    std::swap(e.source, e.target);
    return e;
}

// Stable homology of the automorphism groups of free groups with twisted
// coefficients, assembled from the Ext table: degree i picks up
// Ext^k(Lambda^l, F^d) over k + l = i. For F = S^1 the single contribution
// is the (k, l) = (0, 1) cell.
inline std::vector<std::pair<long, long>> stable_homology(const FunctorKind &f, int max_extra_degree = 1)
{
    const int d = f.exponent;
    std::vector<long> dims(2 * d + 1 + max_extra_degree, 0);
    for (int l = 0; l <= d; ++l) {
        ExtTableEntry cell = rational_ext(FunctorKind{PowerKind::Exterior, l}, f);
        if (cell.dimension == 0) continue;
        long i = cell.degree + l;
        if (i >= 0 && i < static_cast<long>(dims.size())) dims[i] += cell.dimension;
    }
    std::vector<std::pair<long, long>> out;
    for (long i = 0; i <= d + max_extra_degree; ++i) out.emplace_back(i, dims[i]);
    return out;
}

} // namespace extgr
