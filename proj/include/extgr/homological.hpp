#pragma once

#include "extgr/complex.hpp"
#include "extgr/free_group.hpp"
#include "extgr/integer_matrix.hpp"
#include "extgr/permutation.hpp"
#include "extgr/rational.hpp"
#include "extgr/simplicial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace extgr {

// Tensor power functor composed with abelianization, applied to a morphism:
// the m-fold Kronecker power of the exponent-sum matrix.
inline IntegerMatrix induced_tensor_matrix(const IntegerMatrix &a, unsigned m)
{
    return kronecker_power(a, m);
}

// Cochain complex computing Ext^*(a, T^m ∘ a) in degrees 0..K:
// degree-k term has rank (k+1)^m; the differential into degree k is the
// alternating sum of the m-th tensor powers of the face homomorphisms at
// level k. Terms are built up to degree K+1 so the window [0, K] is valid.
inline ComplexZ ext_complex(unsigned m, long max_degree)
{
    if (max_degree < 0) throw std::invalid_argument("ext_complex: negative degree bound");
    const long top = max_degree + 1;
    std::vector<long> ranks(top + 1);
    for (long k = 0; k <= top; ++k) ranks[k] = pow_long(k + 1, m);

    std::vector<IntegerMatrix> diffs;
    for (long k = 1; k <= top; ++k) {
        // differential from degree k-1 to degree k
        IntegerMatrix d(ranks[k], ranks[k - 1]);
        for (int i = 0; i <= static_cast<int>(k) + 1; ++i) {
            IntegerMatrix face = induced_tensor_matrix(abelianization_matrix(face_hom(i, static_cast<int>(k))), m);
            d = d + (i % 2 == 0 ? face : face.scaled(-1));
        }
        diffs.push_back(std::move(d));
    }
    ComplexZ c(0, std::move(ranks), std::move(diffs));
    c.set_valid_window(0, max_degree);
    return c;
}

// ---------------------------------------------------------------------------

struct MultiComplexSpec {
    int n = 1;           // number of resolution slots (source tensor exponent)
    unsigned m = 0;      // target tensor exponent
    long truncation = 0; // maximal total resolution degree of built terms

    MultiComplexSpec(int n_, unsigned m_, long trunc) : n(n_), m(m_), truncation(trunc)
    {
        if (n < 1) throw std::invalid_argument("multicomplex needs at least one slot");
        if (truncation < 0) throw std::invalid_argument("negative truncation");
    }
};

// Totalized n-fold multicomplex computing Ext^*(T^n ∘ a, T^m ∘ a).
// Multi-indices p = (p_1..p_n), p_j >= 1, contribute in total degree
// sum(p_j - 1) a block of rank (sum p_j)^m. Slot-j partial differentials
// carry the Koszul sign (-1)^{(p_1-1)+...+(p_{j-1}-1)}.
class MultiComplex {
  public:
    explicit MultiComplex(const MultiComplexSpec &spec) : spec_(spec)
    {
        const long top = spec.truncation;
        by_degree_.assign(top + 1, {});
        std::vector<int> p(spec.n, 1);
        enumerate(p, 0, 0);
        // block offsets per degree
        offsets_.assign(top + 1, {});
        std::vector<long> ranks(top + 1, 0);
        for (long d = 0; d <= top; ++d) {
            long off = 0;
            for (const auto &q : by_degree_[d]) {
                offsets_[d].push_back(off);
                off += block_rank(q);
            }
            ranks[d] = off;
        }

        std::vector<IntegerMatrix> diffs;
        for (long d = 0; d < top; ++d) diffs.push_back(build_diff(d, ranks[d], ranks[d + 1]));
        complex_ = std::make_unique<ComplexZ>(0, std::move(ranks), std::move(diffs));
        complex_->set_valid_window(0, top == 0 ? 0 : top - 1);
    }

    const MultiComplexSpec &spec() const { return spec_; }
    const ComplexZ &complex() const { return *complex_; }

    long block_rank(const std::vector<int> &p) const
    {
        return pow_long(std::accumulate(p.begin(), p.end(), 0), spec_.m);
    }

    const std::vector<std::vector<int>> &indices_at(long degree) const { return by_degree_[degree]; }

    // Chain map permuting the m tensor factors of every term by sigma.
    std::vector<IntegerMatrix> target_action_chain_map(const Perm &sigma) const
    {
        if (static_cast<int>(sigma.size()) != static_cast<int>(spec_.m))
            throw std::invalid_argument("target action: permutation size must be m");
        std::vector<IntegerMatrix> blocks;
        Perm inv = perm_inverse(sigma);
        for (long d = 0; d <= complex_->hi(); ++d) {
            IntegerMatrix f(complex_->rank(d), complex_->rank(d));
            for (size_t b = 0; b < by_degree_[d].size(); ++b) {
                const auto &p = by_degree_[d][b];
                long base = std::accumulate(p.begin(), p.end(), 0);
                long off = offsets_[d][b];
                long rank = block_rank(p);
                std::vector<long> digits(spec_.m);
                for (long j = 0; j < rank; ++j) {
                    long t = j;
                    for (unsigned q = spec_.m; q-- > 0;) {
                        digits[q] = t % base;
                        t /= base;
                    }
                    long dest = 0;
                    for (unsigned q = 0; q < spec_.m; ++q) dest = dest * base + digits[inv[q] - 1];
                    f.set(off + dest, off + j, 1);
                }
            }
            blocks.push_back(std::move(f));
        }
        return blocks;
    }

    // Chain map permuting the n resolution slots by tau: block (p_1..p_n)
    // maps to (p_{tau^{-1}(1)}..p_{tau^{-1}(n)}) with the Koszul sign over
    // inverted slot pairs, composed with the induced permutation of the
    // free-product generator blocks inside each term.
    std::vector<IntegerMatrix> source_action_chain_map(const Perm &tau) const
    {
        if (static_cast<int>(tau.size()) != spec_.n)
            throw std::invalid_argument("source action: permutation size must be n");
        std::vector<IntegerMatrix> blocks;
        Perm inv = perm_inverse(tau);
        for (long d = 0; d <= complex_->hi(); ++d) {
            IntegerMatrix f(complex_->rank(d), complex_->rank(d));
            for (size_t b = 0; b < by_degree_[d].size(); ++b) {
                const auto &p = by_degree_[d][b];
                std::vector<int> q(spec_.n);
                for (int j = 1; j <= spec_.n; ++j) q[j - 1] = p[inv[j - 1] - 1];
                long qb = find_block(d, q);

                std::vector<long> deg(spec_.n);
                for (int j = 0; j < spec_.n; ++j) deg[j] = p[j] - 1;
                int sign = koszul_sign(tau, deg);

                // generator block permutation: slot j, local position t ->
                // offset of slot tau(j) in q, same local position
                long base = std::accumulate(p.begin(), p.end(), 0);
                std::vector<long> qoff(spec_.n + 1, 0);
                for (int j = 1; j <= spec_.n; ++j) qoff[j] = qoff[j - 1] + q[j - 1];
                std::vector<long> gen_dest(base);
                long pos = 0;
                for (int j = 1; j <= spec_.n; ++j)
                    for (int t = 0; t < p[j - 1]; ++t) gen_dest[pos++] = qoff[tau[j - 1] - 1] + t;

                long rank = block_rank(p);
                long off_src = offsets_[d][b];
                long off_dst = offsets_[d][qb];
                std::vector<long> digits(spec_.m);
                for (long jcol = 0; jcol < rank; ++jcol) {
                    long t = jcol;
                    for (unsigned u = spec_.m; u-- > 0;) {
                        digits[u] = t % base;
                        t /= base;
                    }
                    long dest = 0;
                    for (unsigned u = 0; u < spec_.m; ++u) dest = dest * base + gen_dest[digits[u]];
                    f.set(off_dst + dest, off_src + jcol, sign);
                }
            }
            blocks.push_back(std::move(f));
        }
        return blocks;
    }

  private:
    void enumerate(std::vector<int> &p, int slot, long used)
    {
        if (slot == spec_.n) {
            by_degree_[used].push_back(p);
            return;
        }
        for (int v = 1; used + (v - 1) <= spec_.truncation; ++v) {
            p[slot] = v;
            enumerate(p, slot + 1, used + (v - 1));
        }
        p[slot] = 1;
    }

    long find_block(long degree, const std::vector<int> &q) const
    {
        const auto &list = by_degree_[degree];
        auto it = std::lower_bound(list.begin(), list.end(), q);
        if (it == list.end() || *it != q) throw std::runtime_error("multi-index block not found");
        return static_cast<long>(it - list.begin());
    }

    IntegerMatrix build_diff(long d, long rank_src, long rank_dst) const
    {
        IntegerMatrix out(rank_dst, rank_src);
        for (size_t b = 0; b < by_degree_[d].size(); ++b) {
            const auto &p = by_degree_[d][b];
            long slot_sign_exp = 0;
            for (int j = 0; j < spec_.n; ++j) {
                if (j > 0) slot_sign_exp += p[j - 1] - 1;
                std::vector<int> q = p;
                q[j] += 1;
                long qb = find_block(d + 1, q);
                int slot_sign = (slot_sign_exp % 2 == 0) ? 1 : -1;

                for (int i = 0; i <= p[j] + 1; ++i) {
                    std::vector<IntegerMatrix> diag;
                    diag.reserve(spec_.n);
                    for (int t = 0; t < spec_.n; ++t) {
                        if (t == j)
                            diag.push_back(abelianization_matrix(face_hom(i, p[j])));
                        else
                            diag.push_back(IntegerMatrix::identity(p[t]));
                    }
                    IntegerMatrix face = kronecker_power(block_diagonal(diag), spec_.m);
                    int sign = slot_sign * ((i % 2 == 0) ? 1 : -1);
                    for (const auto &[key, v] : face.entries())
                        out.add(offsets_[d + 1][qb] + key.first, offsets_[d][b] + key.second,
                                sign > 0 ? v : -v);
                }
            }
        }
        return out;
    }

    MultiComplexSpec spec_;
    std::vector<std::vector<std::vector<int>>> by_degree_;
    std::vector<std::vector<long>> offsets_;
    std::unique_ptr<ComplexZ> complex_;
};

// Upper bound on the stored nonzeros of all differentials of the truncated
// multicomplex: per multi-index p and slot j, (p_j + 2) face matrices whose
// tensor powers have at most 2^m entries per column over (sum p)^m columns.
// Used by the resource guard before committing to a build.
inline long long estimate_diff_entries(int n, unsigned m, long truncation)
{
    long long total = 0;
    std::vector<int> p(n, 1);
    auto rec = [&](auto &&self, int slot, long used) -> void {
        if (slot == n) {
            long base = 0;
            for (int v : p) base += v;
            long long cols = 1;
            for (unsigned t = 0; t < m; ++t) cols *= base;
            long long faces = 0;
            for (int j = 0; j < n; ++j)
                if (used + 1 <= truncation) faces += p[j] + 2;
            total += cols * faces * (1LL << std::min<unsigned>(m, 20));
            return;
        }
        for (int v = 1; used + (v - 1) <= truncation; ++v) {
            p[slot] = v;
            self(self, slot + 1, used + (v - 1));
        }
        p[slot] = 1;
    };
    rec(rec, 0, 0);
    return total;
}

// Ext^*(T^n ∘ a, T^m ∘ a) in degrees 0..max_degree, via the totalized
// multicomplex with truncation max_degree + 1.
inline ComplexZ ext_multicomplex(const MultiComplexSpec &spec)
{
    MultiComplex mc(spec);
    ComplexZ c = mc.complex();
    return c;
}

inline std::vector<FgAbelianGroup> tensor_ext_groups(int n, unsigned m, long max_degree)
{
    MultiComplex mc(MultiComplexSpec(n, m, max_degree + 1));
    mc.complex().validate();
    std::vector<FgAbelianGroup> out;
    for (long k = 0; k <= max_degree; ++k) out.push_back(mc.complex().cohomology_unchecked(k));
    return out;
}

// Trace of the sigma tensor-factor permutation on H^k ⊗ Q.
inline Rat target_action_trace(const MultiComplex &mc, const Perm &sigma, long k)
{
    auto cm = mc.target_action_chain_map(sigma);
    return trace_on_rational_cohomology(mc.complex(), cm, k);
}

inline Rat target_action_trace(int n, unsigned m, const Perm &sigma, long k)
{
    MultiComplex mc(MultiComplexSpec(n, m, k + 1));
    return target_action_trace(mc, sigma, k);
}

// Trace of the tau slot permutation on H^k ⊗ Q.
inline Rat source_action_trace(const MultiComplex &mc, const Perm &tau, long k)
{
    auto cm = mc.source_action_chain_map(tau);
    return trace_on_rational_cohomology(mc.complex(), cm, k);
}

inline Rat source_action_trace(int n, unsigned m, const Perm &tau, long k)
{
    MultiComplex mc(MultiComplexSpec(n, m, k + 1));
    return source_action_trace(mc, tau, k);
}

} // namespace extgr
