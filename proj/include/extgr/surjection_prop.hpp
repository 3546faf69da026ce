#pragma once

#include "extgr/arith.hpp"
#include "extgr/integer_matrix.hpp"
#include "extgr/surjection.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace extgr {

// Homogeneous formal integer combination of surjections {1..m} -> {1..n},
// graded by degree m - n. Terms are kept in a sorted map with nonzero
// coefficients, so serialization and equality are deterministic.
class SignedSurjSum {
  public:
    SignedSurjSum(int m, int n) : m_(m), n_(n) {}

    static SignedSurjSum zero(int m, int n) { return SignedSurjSum(m, n); }
    static SignedSurjSum basis(const Surjection &f, Int c = 1)
    {
        SignedSurjSum s(f.m, f.n);
        s.add(f, std::move(c));
        return s;
    }

    int source_size() const { return m_; }
    int target_size() const { return n_; }
    int degree() const { return m_ - n_; }

    const std::map<Surjection, Int> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Surjection &f, const Int &c)
    {
        if (f.m != m_ || f.n != n_) throw std::invalid_argument("term sizes do not match the sum");
        if (c == 0) return;
        auto it = terms_.find(f);
        if (it == terms_.end()) {
            terms_.emplace(f, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const SignedSurjSum &o, const Int &scale = 1)
    {
        if (o.m_ != m_ || o.n_ != n_) throw std::invalid_argument("sum sizes do not match");
        for (const auto &[f, c] : o.terms_) add(f, c * scale);
    }

    SignedSurjSum scaled(const Int &a) const
    {
        SignedSurjSum out(m_, n_);
        if (a != 0)
            for (const auto &[f, c] : terms_) out.terms_.emplace(f, c * a);
        return out;
    }

    Int coeff(const Surjection &f) const
    {
        auto it = terms_.find(f);
        return it == terms_.end() ? Int(0) : it->second;
    }

    bool operator==(const SignedSurjSum &o) const
    {
        return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
    }
    bool operator!=(const SignedSurjSum &o) const { return !(*this == o); }

  private:
    int m_, n_;
    std::map<Surjection, Int> terms_;
};

// --- symmetric group actions ---------------------------------------------

// Right action of sigma in S_m: [f].sigma = prod_i eps(bar of sigma
// restricted to (f∘sigma)^{-1}(i) -> sigma((f∘sigma)^{-1}(i))) · [f∘sigma].
inline SignedSurjSum right_action(const Surjection &f, const Perm &sigma)
{
    if (static_cast<int>(sigma.size()) != f.m) throw std::invalid_argument("right action size mismatch");
    Surjection fs = compose(f, Surjection::from_permutation(sigma));
    int sign = 1;
    for (int i = 1; i <= f.n; ++i) {
        std::vector<int> fib = fs.fiber(i); // ascending
        std::vector<int> img(fib.size());
        for (size_t t = 0; t < fib.size(); ++t) img[t] = perm_apply(sigma, fib[t]);
        sign *= bar_sign(fib, img);
    }
    return SignedSurjSum::basis(fs, sign);
}

inline SignedSurjSum right_action(const SignedSurjSum &x, const Perm &sigma)
{
    SignedSurjSum out(x.source_size(), x.target_size());
    for (const auto &[f, c] : x.terms()) out.add(right_action(f, sigma).scaled(c));
    return out;
}

// Left action of tau in S_n, with the graded (Koszul) sign over inversions
// weighted by fiber degrees |f^{-1}(k)| - 1. For an adjacent transposition
// tau_{k,k+1} this is (-1)^{(|f^{-1}(k)|-1)(|f^{-1}(k+1)|-1)}, and the same
// closed form holds for any transposition of equal-size fibers.
inline SignedSurjSum left_action_general(const Perm &tau, const Surjection &f)
{
    if (static_cast<int>(tau.size()) != f.n) throw std::invalid_argument("left action size mismatch");
    auto sizes = f.fiber_sizes();
    std::vector<long> degrees(f.n);
    for (int k = 0; k < f.n; ++k) degrees[k] = sizes[k] - 1;
    int sign = koszul_sign(tau, degrees);
    Surjection tf = compose(Surjection::from_permutation(tau), f);
    return SignedSurjSum::basis(tf, sign);
}

inline SignedSurjSum left_action_general(const Perm &tau, const SignedSurjSum &x)
{
    SignedSurjSum out(x.source_size(), x.target_size());
    for (const auto &[f, c] : x.terms()) out.add(left_action_general(tau, f).scaled(c));
    return out;
}

// Left action of the transposition (k l); one-step case of the above.
inline SignedSurjSum left_action(int k, int l, const Surjection &f)
{
    if (k == l) throw std::invalid_argument("transposition needs k != l");
    return left_action_general(transposition(f.n, k, l), f);
}

// --- products --------------------------------------------------------------

// External product: disjoint union of sets, left block then right block,
// coefficient product, no extra sign in this slot ordering.
inline SignedSurjSum external_product(const SignedSurjSum &x, const SignedSurjSum &y)
{
    SignedSurjSum out(x.source_size() + y.source_size(), x.target_size() + y.target_size());
    for (const auto &[f, cf] : x.terms())
        for (const auto &[g, cg] : y.terms()) {
            std::vector<int> vals;
            vals.reserve(f.m + g.m);
            for (int v : f.values) vals.push_back(v);
            for (int v : g.values) vals.push_back(v + f.n);
            out.add(Surjection(f.m + g.m, f.n + g.n, std::move(vals)), cf * cg);
        }
    return out;
}

namespace detail {

// order-preserving surjection with the given positive fiber sizes
inline Surjection order_preserving(const std::vector<int> &sizes)
{
    std::vector<int> vals;
    int n = static_cast<int>(sizes.size());
    for (int k = 1; k <= n; ++k) {
        if (sizes[k - 1] <= 0) throw std::invalid_argument("fiber sizes must be positive");
        for (int t = 0; t < sizes[k - 1]; ++t) vals.push_back(k);
    }
    return {static_cast<int>(vals.size()), n, std::move(vals)};
}

// block permutation of {1..sum(sizes)} induced by alpha moving block p
// (consecutive, in the given order) to block position alpha(p)
inline Perm block_permutation(const Perm &alpha, const std::vector<int> &sizes)
{
    int n = static_cast<int>(sizes.size());
    std::vector<int> src_off(n + 1, 0);
    for (int p = 1; p <= n; ++p) src_off[p] = src_off[p - 1] + sizes[p - 1];
    // destination offsets use the permuted size profile
    std::vector<int> dest_sizes(n);
    Perm inv = perm_inverse(alpha);
    for (int r = 1; r <= n; ++r) dest_sizes[r - 1] = sizes[inv[r - 1] - 1];
    std::vector<int> dst_off(n + 1, 0);
    for (int r = 1; r <= n; ++r) dst_off[r] = dst_off[r - 1] + dest_sizes[r - 1];

    Perm out(src_off[n]);
    for (int p = 1; p <= n; ++p) {
        int r = alpha[p - 1];
        for (int t = 0; t < sizes[p - 1]; ++t) out[src_off[p - 1] + t] = dst_off[r - 1] + t + 1;
    }
    return out;
}

} // namespace detail

namespace detail {

// Fusion sign for composing order-preserving surjections s ∘ h. Each
// order-preserving surjection is encoded as a wedge word of odd letters,
// one per non-minimal element of each fiber, listed in ascending order.
// Composing substitutes: h's letters survive at their positions, and each
// letter p of s lands on the minimum of the fiber h^{-1}(p). The sign is
// the parity of sorting the concatenation (h-letters, then s-letters) into
// ascending order; this presentation makes associativity automatic.
inline int fusion_sign(const Surjection &s, const Surjection &h)
{
    std::vector<int> h_letters;
    auto hs = h.fiber_sizes();
    std::vector<int> h_off(h.n + 1, 0);
    for (int p = 1; p <= h.n; ++p) {
        h_off[p] = h_off[p - 1] + hs[p - 1];
        for (int t = 1; t < hs[p - 1]; ++t) h_letters.push_back(h_off[p - 1] + t + 1);
    }
    std::vector<int> s_letters;
    auto ss = s.fiber_sizes();
    int p = 1;
    for (int k = 1; k <= s.n; ++k) {
        for (int t = 0; t < ss[k - 1]; ++t, ++p)
            if (t > 0) s_letters.push_back(h_off[p - 1] + 1); // min of h^{-1}(p)
    }
    // both lists ascend; count crossings a > b with a from h, b from s
    long inversions = 0;
    for (int a : h_letters)
        for (int b : s_letters)
            if (a > b) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace detail

// Yoneda composition [g] ∘ [f] for g: m -> l and f: n -> m, computed in the
// shuffle normal form with explicit graded signs:
//   1. g = s_g ∘ a_g, f = s_f ∘ a_f (canonical, sign-free),
//   2. move a_g past s_f: Koszul sign over inversions of a_g weighted by the
//      fiber degrees of f, leaving an order-preserving part and the induced
//      block permutation,
//   3. fuse the two order-preserving parts with the odd-letter sorting sign,
//   4. normalize the residual permutation through the signed right action.
inline SignedSurjSum yoneda(const Surjection &g, const Surjection &f)
{
    if (f.n != g.m) throw std::invalid_argument("yoneda: inner sizes do not match");

    auto [sg, ag] = canonical_decomposition(g);
    auto [sf, af] = canonical_decomposition(f);

    std::vector<int> j_sizes = sf.fiber_sizes(); // fiber sizes of f, indexed by target
    std::vector<long> j_deg(j_sizes.size());
    for (size_t p = 0; p < j_sizes.size(); ++p) j_deg[p] = j_sizes[p] - 1;

    // step 2: a_g ∘ s_f = s2 ∘ b
    int k1 = koszul_sign(ag, j_deg);
    Perm ag_inv = perm_inverse(ag);
    std::vector<int> j2(j_sizes.size());
    for (size_t r = 0; r < j_sizes.size(); ++r) j2[r] = j_sizes[ag_inv[r] - 1];
    Perm b = detail::block_permutation(ag, j_sizes);
    Surjection s2 = detail::order_preserving(j2);

    // step 3: fuse
    int fuse = detail::fusion_sign(sg, s2);
    Surjection s_total = compose(sg, s2);

    // step 4: residual permutation through the signed right action
    Perm beta = perm_compose(b, af);
    SignedSurjSum res = right_action(s_total, beta);
    return res.scaled(Int(k1 * fuse));
}

inline SignedSurjSum yoneda(const SignedSurjSum &x, const SignedSurjSum &y)
{
    if (y.target_size() != x.source_size()) throw std::invalid_argument("yoneda: inner sizes do not match");
    SignedSurjSum out(y.source_size(), x.target_size());
    for (const auto &[g, cg] : x.terms())
        for (const auto &[f, cf] : y.terms()) out.add(yoneda(g, f).scaled(cg * cf));
    return out;
}

// --- operad and free-PROP bookkeeping ---------------------------------------

// The arity-n operad piece is realized as sums of surjections n -> 1
// (degree n - 1). gamma(x; y_1..y_k) = yoneda(x, external(y_1, ..., y_k)).
inline SignedSurjSum operad_compose(const SignedSurjSum &x, const std::vector<SignedSurjSum> &ys)
{
    if (x.target_size() != 1) throw std::invalid_argument("operad element must have target size 1");
    if (static_cast<int>(ys.size()) != x.source_size())
        throw std::invalid_argument("operad composition needs one argument per input");
    SignedSurjSum ext(0, 0);
    ext.add(Surjection(0, 0, {}), 1);
    for (const auto &y : ys) {
        if (y.target_size() != 1) throw std::invalid_argument("operad argument must have target size 1");
        ext = external_product(ext, y);
    }
    return yoneda(x, ext);
}

inline SignedSurjSum operad_unit()
{
    return SignedSurjSum::basis(Surjection::identity(1));
}

// A family of graded pieces indexed by arity, each a free abelian group
// with a signed permutation action of the symmetric group on a chosen
// basis. Houses the one-dimensional sign sequence (degree n-1) and the
// operad realized on surjections onto a point.
struct SymmetricSequencePiece {
    long degree = 0;
    long rank = 0;
    std::function<IntegerMatrix(const Perm &)> action;
};

struct SymmetricSequence {
    std::function<SymmetricSequencePiece(int)> piece;

    // identity and composition axioms on a given arity
    bool action_axioms_hold(int arity) const
    {
        auto p = piece(arity);
        if (p.action(perm_identity(arity)) != IntegerMatrix::identity(p.rank)) return false;
        for (const auto &s : all_permutations(arity))
            for (const auto &t : all_permutations(arity))
                if (p.action(perm_compose(s, t)) != p.action(s) * p.action(t)) return false;
        return true;
    }
};

// the sign representation placed in degree n - 1
inline SymmetricSequence sign_sequence()
{
    SymmetricSequence seq;
    seq.piece = [](int n) {
        SymmetricSequencePiece p;
        p.degree = n - 1;
        p.rank = n >= 1 ? 1 : 0;
        p.action = [](const Perm &s) {
            IntegerMatrix m(1, 1);
            m.set(0, 0, perm_sign(s));
            return m;
        };
        return p;
    };
    return seq;
}

// the arity-n operad piece on the basis Surj(n, 1), acted on from the right
inline SymmetricSequence operad_sequence()
{
    SymmetricSequence seq;
    seq.piece = [](int n) {
        SymmetricSequencePiece p;
        p.degree = n - 1;
        auto basis = enumerate_surjections(n, 1);
        p.rank = static_cast<long>(basis.size());
        p.action = [basis](const Perm &s) {
            IntegerMatrix m(static_cast<long>(basis.size()), static_cast<long>(basis.size()));
            for (size_t j = 0; j < basis.size(); ++j) {
                SignedSurjSum img = right_action(basis[j], s);
                for (size_t i = 0; i < basis.size(); ++i) {
                    Int c = img.coeff(basis[i]);
                    if (c != 0) m.set(static_cast<long>(i), static_cast<long>(j), c);
                }
            }
            return m;
        };
        return p;
    };
    return seq;
}

// |Surj(m,n)| == sum over positive compositions (i_1..i_n) of m of the
// multinomial m!/(i_1! ... i_n!): the rank identity of the PROP freely
// generated by the one-generator-per-arity operad.
inline bool free_prop_rank_identity(int m, int n)
{
    Int lhs = static_cast<long>(enumerate_surjections(m, n).size());
    Int rhs = 0;
    if (n == 0) {
        rhs = (m == 0) ? 1 : 0;
    } else {
        std::vector<int> comp(n, 1);
        auto rec = [&](auto &&self, int pos, int rest) -> void {
            if (pos == n - 1) {
                if (rest >= 1) {
                    comp[pos] = rest;
                    Int term = factorial(m);
                    for (int c : comp) term /= factorial(c);
                    rhs += term;
                }
                return;
            }
            for (int v = 1; v + (n - pos - 1) <= rest; ++v) {
                comp[pos] = v;
                self(self, pos + 1, rest - v);
            }
        };
        rec(rec, 0, m);
    }
    return lhs == rhs;
}

// Matrix of f -> sum over sigma in S_n of the signed left action of sigma,
// in the lexicographic enumeration basis of Surj(m,n).
inline IntegerMatrix trace_endomorphism(int m, int n)
{
    if (n < 1 || m < n) throw std::invalid_argument("trace endomorphism needs m >= n >= 1");
    auto basis = enumerate_surjections(m, n);
    std::map<Surjection, long> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<long>(i);

    IntegerMatrix mat(static_cast<long>(basis.size()), static_cast<long>(basis.size()));
    auto perms = all_permutations(n);
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto &sigma : perms) {
            SignedSurjSum t = left_action_general(sigma, basis[j]);
            for (const auto &[h, c] : t.terms()) mat.add(index.at(h), static_cast<long>(j), c);
        }
    return mat;
}

} // namespace extgr
