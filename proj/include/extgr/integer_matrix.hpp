#pragma once

#include "extgr/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace extgr {

// Sparse exact integer matrix. Absent entries are zero; stored entries are
// kept nonzero. Entries live in a sorted (row, col) -> value map so that
// iteration order, serialization and equality are deterministic.
class IntegerMatrix {
  public:
    using Key = std::pair<long, long>;

    IntegerMatrix() = default;
    IntegerMatrix(long rows, long cols) : rows_(rows), cols_(cols)
    {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static IntegerMatrix identity(long n)
    {
        IntegerMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const { return static_cast<long>(entries_.size()); }

    const std::map<Key, Int> &entries() const { return entries_; }

    void set(long r, long c, Int v)
    {
        check_index(r, c);
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(v);
    }

    void add(long r, long c, const Int &v)
    {
        if (v == 0) return;
        check_index(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            entries_.emplace(Key{r, c}, v);
        } else {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    Int get(long r, long c) const
    {
        check_index(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Int(0) : it->second;
    }

    bool is_zero() const { return entries_.empty(); }

    bool operator==(const IntegerMatrix &o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntegerMatrix &o) const { return !(*this == o); }

    IntegerMatrix operator*(const IntegerMatrix &o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        // group right factor by row for the sparse product
        std::vector<std::vector<std::pair<long, const Int *>>> by_row(o.rows_);
        for (const auto &[k, v] : o.entries_) by_row[k.first].emplace_back(k.second, &v);
        IntegerMatrix out(rows_, o.cols_);
        for (const auto &[k, v] : entries_) {
            for (const auto &[c, w] : by_row[k.second]) out.add(k.first, c, v * (*w));
        }
        return out;
    }

    IntegerMatrix operator+(const IntegerMatrix &o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        IntegerMatrix out = *this;
        for (const auto &[k, v] : o.entries_) out.add(k.first, k.second, v);
        return out;
    }

    IntegerMatrix operator-(const IntegerMatrix &o) const { return *this + o.scaled(-1); }

    IntegerMatrix scaled(const Int &a) const
    {
        IntegerMatrix out(rows_, cols_);
        if (a == 0) return out;
        for (const auto &[k, v] : entries_) out.entries_[k] = v * a;
        return out;
    }

    IntegerMatrix transposed() const
    {
        IntegerMatrix out(cols_, rows_);
        for (const auto &[k, v] : entries_) out.entries_[{k.second, k.first}] = v;
        return out;
    }

    std::vector<std::vector<Int>> dense() const
    {
        std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, 0));
        for (const auto &[k, v] : entries_) d[k.first][k.second] = v;
        return d;
    }

    static IntegerMatrix from_dense(const std::vector<std::vector<Int>> &d)
    {
        long r = static_cast<long>(d.size());
        long c = r == 0 ? 0 : static_cast<long>(d[0].size());
        IntegerMatrix m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j)
                if (d[i][j] != 0) m.set(i, j, d[i][j]);
        return m;
    }

  private:
    void check_index(long r, long c) const
    {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of bounds");
    }

    long rows_ = 0;
    long cols_ = 0;
    std::map<Key, Int> entries_;
};

// m-fold Kronecker power with lexicographic ordering of the tensor basis:
// basis vector (a_1,...,a_m) of the power maps to index sum a_t * rows^(m-1-t).
// Realizes the m-th tensor power functor on matrices; m = 0 gives (1).
inline IntegerMatrix kronecker_power(const IntegerMatrix &a, unsigned m)
{
    if (m == 0) return IntegerMatrix::identity(1);

    long r = 1, c = 1;
    for (unsigned t = 0; t < m; ++t) {
        r *= a.rows();
        c *= a.cols();
    }
    IntegerMatrix out(r, c);

    // columns of a, as sparse lists
    std::vector<std::vector<std::pair<long, Int>>> col(a.cols());
    for (const auto &[k, v] : a.entries()) col[k.second].emplace_back(k.first, v);

    std::vector<long> digits(m, 0);
    std::vector<std::pair<long, Int>> acc, next;
    for (long j = 0; j < c; ++j) {
        // digits = base-a.cols() expansion of j, most significant first
        long t = j;
        for (unsigned p = m; p-- > 0;) {
            digits[p] = t % a.cols();
            t /= a.cols();
        }
        acc.assign(1, {0, Int(1)});
        for (unsigned p = 0; p < m; ++p) {
            next.clear();
            for (const auto &[ri, vi] : acc)
                for (const auto &[rj, vj] : col[digits[p]])
                    next.emplace_back(ri * a.rows() + rj, vi * vj);
            acc.swap(next);
            if (acc.empty()) break;
        }
        for (auto &[ri, v] : acc) out.add(ri, j, v);
    }
    return out;
}

// Block-diagonal assembly, in the given order.
inline IntegerMatrix block_diagonal(const std::vector<IntegerMatrix> &blocks)
{
    long r = 0, c = 0;
    for (const auto &b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntegerMatrix out(r, c);
    long ro = 0, co = 0;
    for (const auto &b : blocks) {
        for (const auto &[k, v] : b.entries()) out.set(ro + k.first, co + k.second, v);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

// Permutation matrix P with P * e_j = e_{dest[j]} (dest is 0-based).
inline IntegerMatrix permutation_matrix(const std::vector<long> &dest)
{
    long n = static_cast<long>(dest.size());
    IntegerMatrix p(n, n);
    for (long j = 0; j < n; ++j) p.set(dest[j], j, 1);
    return p;
}

} // namespace extgr
