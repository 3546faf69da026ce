#pragma once

#include "extgr/arith.hpp"
#include "extgr/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace extgr {

struct SmithResult {
    IntegerMatrix u; // rows x rows, unimodular
    IntegerMatrix d; // rows x cols, diagonal, nonnegative, divisibility chain
    IntegerMatrix v; // cols x cols, unimodular
};

namespace detail {

// Pivot choice: minimal absolute value, ties broken by least fill
// (fewest other nonzeros in the pivot row + column). Keeps coefficient
// growth tame on the sparse {0,1} Kronecker-power matrices.
template <typename Mat>
bool min_abs_pivot(const Mat &a, long s, long m, long n, long &pr, long &pc)
{
    bool found = false;
    Int best;
    long best_fill = 0;
    std::vector<long> rcount(m, 0), ccount(n, 0);
    for (long i = s; i < m; ++i)
        for (long j = s; j < n; ++j)
            if (a[i][j] != 0) {
                ++rcount[i];
                ++ccount[j];
            }
    for (long i = s; i < m; ++i)
        for (long j = s; j < n; ++j) {
            if (a[i][j] == 0) continue;
            Int v = abs(a[i][j]);
            long fill = (rcount[i] - 1) + (ccount[j] - 1);
            if (!found || v < best || (v == best && fill < best_fill)) {
                found = true;
                best = v;
                best_fill = fill;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace detail

// Smith normal form: returns (U, D, V) with U·M·V = D, U and V unimodular,
// D diagonal with nonnegative entries d_1 | d_2 | ... Dense working copy;
// intended for the sizes where the transforms themselves are wanted.
inline SmithResult smith_normal_form(const IntegerMatrix &mat)
{
    const long m = mat.rows(), n = mat.cols();
    auto a = mat.dense();
    auto u = IntegerMatrix::identity(m).dense();
    auto v = IntegerMatrix::identity(n).dense();

    auto row_op = [&](long dst, long src, const Int &q) { // row_dst -= q * row_src
        for (long j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
        for (long j = 0; j < m; ++j) u[dst][j] -= q * u[src][j];
    };
    auto col_op = [&](long dst, long src, const Int &q) { // col_dst -= q * col_src
        for (long i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
        for (long i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
    };
    auto row_swap = [&](long i, long j) {
        if (i == j) return;
        a[i].swap(a[j]);
        u[i].swap(u[j]);
    };
    auto col_swap = [&](long i, long j) {
        if (i == j) return;
        for (long r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (long r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    };

    const long steps = std::min(m, n);
    for (long s = 0; s < steps; ++s) {
        // re-select the global minimum pivot on every reduction round; the
        // pivot value strictly decreases between rounds, which both bounds
        // the loop and keeps coefficient growth in check
        for (;;) {
            long pr, pc;
            if (!detail::min_abs_pivot(a, s, m, n, pr, pc)) {
                s = steps; // remaining block is zero
                break;
            }
            row_swap(s, pr);
            col_swap(s, pc);

            bool clean = true;
            for (long i = s + 1; i < m; ++i) {
                if (a[i][s] == 0) continue;
                Int q = a[i][s] / a[s][s]; // truncated: |remainder| < |pivot|
                if (q != 0) row_op(i, s, q);
                if (a[i][s] != 0) clean = false;
            }
            for (long j = s + 1; j < n; ++j) {
                if (a[s][j] == 0) continue;
                Int q = a[s][j] / a[s][s];
                if (q != 0) col_op(j, s, q);
                if (a[s][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (s >= steps) break;
    }

    // normalize signs
    for (long s = 0; s < steps; ++s)
        if (a[s][s] < 0) {
            for (long j = 0; j < n; ++j) a[s][j] = -a[s][j];
            for (long j = 0; j < m; ++j) u[s][j] = -u[s][j];
        }

    // enforce the divisibility chain d_i | d_j (i < j)
    for (long i = 0; i < steps; ++i) {
        for (long j = i + 1; j < steps; ++j) {
            if (a[i][i] == 0 && a[j][j] != 0) { // move the nonzero forward
                row_swap(i, j);
                col_swap(i, j);
            }
            if (a[i][i] == 0 || a[j][j] == 0) continue;
            if (a[j][j] % a[i][i] == 0) continue;
            // transform diag(a,b) into diag(gcd(a,b), lcm(a,b))
            col_op(i, j, -1); // col_i += col_j: b appears at (j,i)
            for (;;) {
                if (a[j][i] != 0) {
                    if (a[i][i] == 0 || abs(a[j][i]) < abs(a[i][i])) row_swap(i, j);
                    if (a[j][i] != 0 && a[i][i] != 0) {
                        Int q = a[j][i] / a[i][i];
                        if (q != 0) row_op(j, i, q);
                        if (a[j][i] != 0) continue;
                    }
                }
                if (a[i][j] != 0) {
                    Int q = a[i][j] / a[i][i];
                    if (q != 0) col_op(j, i, q);
                    if (a[i][j] != 0) {
                        col_swap(i, j);
                        continue;
                    }
                }
                break;
            }
            for (long t : {i, j})
                if (a[t][t] < 0) {
                    for (long c = 0; c < n; ++c) a[t][c] = -a[t][c];
                    for (long c = 0; c < m; ++c) u[t][c] = -u[t][c];
                }
        }
    }

    return {IntegerMatrix::from_dense(u), IntegerMatrix::from_dense(a), IntegerMatrix::from_dense(v)};
}

// --- sparse divisor-only elimination ------------------------------------

namespace detail {

struct SparseElim {
    long nrows, ncols;
    std::vector<std::vector<std::pair<long, Int>>> row; // sorted by column
    std::vector<long> col_count;
    long total_nnz = 0;

    explicit SparseElim(const IntegerMatrix &m)
        : nrows(m.rows()), ncols(m.cols()), row(m.rows()), col_count(m.cols(), 0)
    {
        for (const auto &[k, v] : m.entries()) {
            row[k.first].emplace_back(k.second, v);
            ++col_count[k.second];
            ++total_nnz;
        }
    }

    static const Int *find(const std::vector<std::pair<long, Int>> &r, long c)
    {
        auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const auto &e, long col) { return e.first < col; });
        if (it != r.end() && it->first == c) return &it->second;
        return nullptr;
    }

    // dst -= q * src (merge of sorted rows), with nnz bookkeeping
    void row_axpy(std::vector<std::pair<long, Int>> &dst, const std::vector<std::pair<long, Int>> &src,
                  const Int &q)
    {
        std::vector<std::pair<long, Int>> out;
        out.reserve(dst.size() + src.size());
        size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
                out.push_back(std::move(dst[i++]));
            } else if (i == dst.size() || src[j].first < dst[i].first) {
                Int v = -q * src[j].second;
                if (v != 0) {
                    ++col_count[src[j].first];
                    ++total_nnz;
                    out.emplace_back(src[j].first, std::move(v));
                }
                ++j;
            } else {
                Int v = dst[i].second - q * src[j].second;
                if (v != 0) {
                    out.emplace_back(dst[i].first, std::move(v));
                } else {
                    --col_count[dst[i].first];
                    --total_nnz;
                }
                ++i;
                ++j;
            }
        }
        dst.swap(out);
    }
};

} // namespace detail

// Elementary divisors: the diagonal of the Smith form restricted to its
// nonzero entries, with the divisibility chain enforced. No transforms are
// accumulated, so this scales to the large Kronecker-power differentials.
// The count of divisors equals the rank over Q.
inline std::vector<Int> elementary_divisors(const IntegerMatrix &mat)
{
    detail::SparseElim w(mat);
    std::vector<Int> diag;
    std::vector<char> done(w.nrows, 0);

    while (w.total_nnz > 0) {
        // global pivot choice: |v| minimal, then least Markowitz cost.
        // Among unit pivots the scan is capped to keep selection linear.
        long pr = -1, pc = -1;
        Int best;
        long best_cost = std::numeric_limits<long>::max();
        int unit_seen = 0;
        const int unit_cap = 512;
        for (long i = 0; i < w.nrows && unit_seen < unit_cap; ++i) {
            if (done[i] || w.row[i].empty()) continue;
            const long rn = static_cast<long>(w.row[i].size());
            for (const auto &[c, v] : w.row[i]) {
                Int av = abs(v);
                long cost = (rn - 1) * (w.col_count[c] - 1);
                bool better;
                if (pr < 0)
                    better = true;
                else if (av != best)
                    better = av < best;
                else
                    better = cost < best_cost;
                if (better) {
                    pr = i;
                    pc = c;
                    best = av;
                    best_cost = cost;
                }
                if (av == 1 && ++unit_seen >= unit_cap) break;
            }
        }
        if (pr < 0) break;

        // Bring position (pr, pc) to a state where both its row and column
        // are singletons; every move is a unimodular row/column operation.
        for (;;) {
            // clear column pc with row operations
            for (;;) {
                bool again = false;
                const Int *pv = detail::SparseElim::find(w.row[pr], pc);
                for (long i = 0; i < w.nrows; ++i) {
                    if (i == pr || done[i]) continue;
                    const Int *e = detail::SparseElim::find(w.row[i], pc);
                    if (!e) continue;
                    Int q = *e / *pv;
                    if (q != 0) w.row_axpy(w.row[i], w.row[pr], q);
                    if (detail::SparseElim::find(w.row[i], pc)) {
                        std::swap(w.row[pr], w.row[i]); // smaller remainder becomes pivot
                        pv = detail::SparseElim::find(w.row[pr], pc);
                        again = true;
                    }
                }
                if (!again) break;
            }

            // column pc is a singleton; reduce the pivot row mod pivot with
            // column ops (they touch only this row now)
            const Int *pv = detail::SparseElim::find(w.row[pr], pc);
            Int p = *pv;
            std::vector<std::pair<long, Int>> reduced;
            reduced.reserve(w.row[pr].size());
            for (auto &[c, v] : w.row[pr]) {
                if (c == pc) {
                    reduced.emplace_back(c, v);
                    continue;
                }
                Int r = v % p; // truncated: |r| < |p|
                if (r == 0) {
                    --w.col_count[c];
                    --w.total_nnz;
                } else {
                    reduced.emplace_back(c, std::move(r));
                }
            }
            w.row[pr].swap(reduced);

            if (w.row[pr].size() == 1) { // both row and column singletons
                diag.push_back(abs(p));
                --w.col_count[pc];
                --w.total_nnz;
                w.row[pr].clear();
                done[pr] = 1;
                break;
            }
            // move the pivot to the smallest surviving remainder
            long nc = -1;
            Int nb;
            for (const auto &[c, v] : w.row[pr]) {
                if (c == pc) continue;
                Int av = abs(v);
                if (nc < 0 || av < nb) {
                    nc = c;
                    nb = av;
                }
            }
            pc = nc; // |new pivot| < |p|: the loop terminates
        }

        for (long i = 0; i < w.nrows; ++i)
            if (!done[i] && w.row[i].empty()) done[i] = 1;
    }

    // normalize the multiset into a divisibility chain
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < diag.size(); ++i)
            for (size_t j = i + 1; j < diag.size(); ++j)
                if (diag[j] % diag[i] != 0) {
                    Int g = gcd(diag[i], diag[j]);
                    Int l = diag[i] / g * diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

inline long rank_of(const IntegerMatrix &m) { return static_cast<long>(elementary_divisors(m).size()); }

// Exact determinant by fraction-free (Bareiss) elimination; used to verify
// unimodularity of the Smith transforms independently of how they were built.
inline Int determinant(const IntegerMatrix &mat)
{
    if (mat.rows() != mat.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const long n = mat.rows();
    if (n == 0) return 1;
    auto a = mat.dense();
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            long s = -1;
            for (long i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    s = i;
                    break;
                }
            if (s < 0) return 0;
            a[k].swap(a[s]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        for (long i = k + 1; i < n; ++i) a[i][k] = 0;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

} // namespace extgr
