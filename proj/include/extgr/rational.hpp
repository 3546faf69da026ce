#pragma once

#include "extgr/arith.hpp"
#include "extgr/complex.hpp"
#include "extgr/integer_matrix.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace extgr {

// Dense exact rational matrix; sized for cohomology computations in the
// trace checks, not for the big integral differentials.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, 0)) {}

    static QMatrix identity(long n)
    {
        QMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.a_[i][i] = 1;
        return m;
    }

    static QMatrix from_integer(const IntegerMatrix &m)
    {
        QMatrix q(m.rows(), m.cols());
        for (const auto &[k, v] : m.entries()) q.a_[k.first][k.second] = Rat(v);
        return q;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rat &at(long r, long c) { return a_[r][c]; }
    const Rat &at(long r, long c) const { return a_[r][c]; }

    QMatrix operator*(const QMatrix &o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("rational product shape mismatch");
        QMatrix out(rows_, o.cols_);
        for (long i = 0; i < rows_; ++i)
            for (long k = 0; k < cols_; ++k) {
                if (a_[i][k] == 0) continue;
                for (long j = 0; j < o.cols_; ++j) {
                    if (o.a_[k][j] == 0) continue;
                    out.a_[i][j] += a_[i][k] * o.a_[k][j];
                }
            }
        return out;
    }

    bool operator==(const QMatrix &o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const QMatrix &o) const { return !(*this == o); }

    bool is_zero() const
    {
        for (const auto &row : a_)
            for (const auto &v : row)
                if (v != 0) return false;
        return true;
    }

    Rat trace() const
    {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        Rat t = 0;
        for (long i = 0; i < rows_; ++i) t += a_[i][i];
        return t;
    }

    // in-place reduced row echelon form; returns pivot columns
    std::vector<long> rref()
    {
        std::vector<long> pivots;
        long r = 0;
        for (long c = 0; c < cols_ && r < rows_; ++c) {
            long p = -1;
            for (long i = r; i < rows_; ++i)
                if (a_[i][c] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            a_[r].swap(a_[p]);
            Rat inv = Rat(1) / a_[r][c];
            for (long j = c; j < cols_; ++j) a_[r][j] *= inv;
            for (long i = 0; i < rows_; ++i) {
                if (i == r || a_[i][c] == 0) continue;
                Rat f = a_[i][c];
                for (long j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    long rank() const
    {
        QMatrix c = *this;
        return static_cast<long>(c.rref().size());
    }

    // basis of the right kernel; deterministic echelon-form choice with one
    // vector per free column (unit coefficient at that column)
    std::vector<std::vector<Rat>> kernel_basis() const
    {
        QMatrix r = *this;
        auto pivots = r.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (long c : pivots) is_pivot[c] = 1;
        std::vector<std::vector<Rat>> basis;
        for (long c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<Rat> v(cols_, 0);
            v[c] = 1;
            for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.a_[i][c];
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rat>> a_;
};

// A deterministic basis of H^k(C) ⊗ Q: kernel vectors of diff(k) selected
// modulo the image of diff(k-1). Only basis-independent data (rank, trace)
// should cross module boundaries.
struct CohomologyBasisQ {
    long ambient = 0;                      // rank of the degree-k term
    std::vector<std::vector<Rat>> kernel;  // kernel basis of diff(k)
    QMatrix span;                          // [image cols | kernel vectors]
    long image_cols = 0;
    std::vector<long> selected;            // kernel indices representing H^k

    long dim() const { return static_cast<long>(selected.size()); }

    // coordinates of cocycles (columns of rhs) in the quotient basis
    QMatrix quotient_coordinates(const QMatrix &rhs) const
    {
        const long n = span.rows(), m = span.cols(), t = rhs.cols();
        QMatrix sys(n, m + t);
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < m; ++j) sys.at(i, j) = span.at(i, j);
            for (long j = 0; j < t; ++j) sys.at(i, m + j) = rhs.at(i, j);
        }
        auto piv = sys.rref();
        for (long p : piv)
            if (p >= m) throw std::runtime_error("vector outside the cocycle span");
        // solution with free variables zero: x[piv[r]] = sys(r, m + j)
        QMatrix out(dim(), t);
        std::map<long, long> sel_pos; // kernel index -> row of out
        for (long s = 0; s < dim(); ++s) sel_pos[selected[s]] = s;
        for (size_t r = 0; r < piv.size(); ++r) {
            long p = piv[r];
            if (p < image_cols) continue;
            auto it = sel_pos.find(p - image_cols);
            if (it == sel_pos.end()) continue; // dependent kernel column never carries a pivot
            for (long j = 0; j < t; ++j) out.at(it->second, j) = sys.at(static_cast<long>(r), m + j);
        }
        return out;
    }
};

inline CohomologyBasisQ rational_cohomology_basis(const ComplexZ &c, long k)
{
    if (k < c.window_lo() || k > c.window_hi())
        throw std::out_of_range("cohomology degree outside the declared valid window");
    CohomologyBasisQ b;
    b.ambient = c.rank(k);

    if (c.has_diff(k)) {
        b.kernel = QMatrix::from_integer(c.diff(k)).kernel_basis();
    } else {
        for (long j = 0; j < b.ambient; ++j) {
            std::vector<Rat> v(b.ambient, 0);
            v[j] = 1;
            b.kernel.push_back(std::move(v));
        }
    }

    QMatrix img = c.has_diff(k - 1) ? QMatrix::from_integer(c.diff(k - 1)) : QMatrix(b.ambient, 0);
    b.image_cols = img.cols();
    b.span = QMatrix(b.ambient, b.image_cols + static_cast<long>(b.kernel.size()));
    for (long i = 0; i < img.rows(); ++i)
        for (long j = 0; j < img.cols(); ++j) b.span.at(i, j) = img.at(i, j);
    for (size_t j = 0; j < b.kernel.size(); ++j)
        for (long i = 0; i < b.ambient; ++i)
            b.span.at(i, b.image_cols + static_cast<long>(j)) = b.kernel[j][i];

    QMatrix probe = b.span;
    for (long p : probe.rref())
        if (p >= b.image_cols) b.selected.push_back(p - b.image_cols);
    return b;
}

// Exact commutation check: F_{k+1} ∘ d_C(k) == d_C'(k) ∘ F_k on every stored
// composable degree. chain_map[k - C.lo()] maps the degree-k term of C to the
// degree-k term of C'.
inline void check_chain_map(const ComplexZ &src, const ComplexZ &dst,
                            const std::vector<IntegerMatrix> &chain_map)
{
    if (static_cast<long>(chain_map.size()) != src.hi() - src.lo() + 1)
        throw std::invalid_argument("chain map must provide one block per degree");
    if (src.lo() != dst.lo() || src.hi() != dst.hi())
        throw std::invalid_argument("chain map requires equal degree ranges");
    for (long k = src.lo(); k <= src.hi(); ++k) {
        const auto &f = chain_map[k - src.lo()];
        if (f.cols() != src.rank(k) || f.rows() != dst.rank(k))
            throw std::invalid_argument("chain map block shape mismatch");
    }
    for (long k = src.lo(); k < src.hi(); ++k) {
        const auto &fk = chain_map[k - src.lo()];
        const auto &fk1 = chain_map[k + 1 - src.lo()];
        if (fk1 * src.diff(k) != dst.diff(k) * fk)
            throw std::invalid_argument("chain map does not commute with the differentials");
    }
}

// Induced linear map H^k(src)⊗Q -> H^k(dst)⊗Q in the deterministic bases.
inline QMatrix induced_map_on_rational_cohomology(const ComplexZ &src, const ComplexZ &dst,
                                                  const std::vector<IntegerMatrix> &chain_map, long k)
{
    check_chain_map(src, dst, chain_map);
    auto bs = rational_cohomology_basis(src, k);
    auto bd = rational_cohomology_basis(dst, k);

    QMatrix f = QMatrix::from_integer(chain_map[k - src.lo()]);
    QMatrix images(bd.ambient, bs.dim());
    for (long j = 0; j < bs.dim(); ++j) {
        const auto &v = bs.kernel[bs.selected[j]];
        for (long i = 0; i < bd.ambient; ++i) {
            Rat acc = 0;
            for (long t = 0; t < bs.ambient; ++t)
                if (f.at(i, t) != 0 && v[t] != 0) acc += f.at(i, t) * v[t];
            images.at(i, j) = acc;
        }
    }
    return bd.quotient_coordinates(images);
}

inline Rat trace_on_rational_cohomology(const ComplexZ &c, const std::vector<IntegerMatrix> &chain_map,
                                        long k)
{
    return induced_map_on_rational_cohomology(c, c, chain_map, k).trace();
}

} // namespace extgr
