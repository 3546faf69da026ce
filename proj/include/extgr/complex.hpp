#pragma once

#include "extgr/abelian_group.hpp"
#include "extgr/integer_matrix.hpp"
#include "extgr/smith.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace extgr {

// Cochain complex of finitely generated free abelian groups over a
// contiguous degree range [lo, hi]. diff(k) maps the degree-k term to the
// degree-(k+1) term. A complex built by truncation declares the window of
// degrees in which its cohomology is meaningful; queries outside the window
// are errors, not zeros.
class ComplexZ {
  public:
    ComplexZ(long lo, std::vector<long> ranks, std::vector<IntegerMatrix> diffs)
        : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs))
    {
        if (ranks_.empty()) throw std::invalid_argument("complex needs at least one term");
        if (diffs_.size() + 1 != ranks_.size())
            throw std::invalid_argument("complex needs exactly one differential per adjacent pair");
        for (size_t i = 0; i < diffs_.size(); ++i) {
            if (diffs_[i].cols() != ranks_[i] || diffs_[i].rows() != ranks_[i + 1])
                throw std::invalid_argument("differential shape does not match adjacent term ranks");
        }
        window_lo_ = lo_;
        window_hi_ = hi();
    }

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(ranks_.size()) - 1; }

    long rank(long k) const
    {
        if (k < lo_ || k > hi()) return 0;
        return ranks_[k - lo_];
    }

    // differential from degree k to k+1 (zero outside the stored range)
    const IntegerMatrix &diff(long k) const
    {
        static const IntegerMatrix zero(0, 0);
        if (k < lo_ || k >= hi()) return zero;
        return diffs_[k - lo_];
    }

    bool has_diff(long k) const { return k >= lo_ && k < hi(); }

    void set_valid_window(long a, long b)
    {
        if (a < lo_ || b > hi() || a > b) throw std::invalid_argument("invalid cohomology window");
        window_lo_ = a;
        window_hi_ = b;
    }
    long window_lo() const { return window_lo_; }
    long window_hi() const { return window_hi_; }

    // d∘d = 0 on every stored composable pair (checked once, then cached)
    void validate() const
    {
        if (validated_) return;
        for (long k = lo_; k + 1 < hi(); ++k) {
            if (!(diff(k + 1) * diff(k)).is_zero())
                throw std::runtime_error("complex differentials do not square to zero");
        }
        validated_ = true;
    }

    // H^k = ker diff(k) / im diff(k-1). Free rank and torsion are read off
    // elementary divisors: ker A is a saturated sublattice, so the quotient
    // Z^{n_k}/im B splits as H^k ⊕ Z^{rank A}, giving
    //   free rank = n_k - rank A - rank B,  torsion = divisors(B) > 1.
    FgAbelianGroup cohomology(long k) const
    {
        if (k < window_lo_ || k > window_hi_)
            throw std::out_of_range("cohomology degree outside the declared valid window");
        validate();
        return cohomology_unchecked(k);
    }

    FgAbelianGroup cohomology_unchecked(long k) const
    {
        long rank_out = 0, rank_in = 0;
        std::vector<Int> tors;
        if (has_diff(k)) rank_out = divisor_count(k);
        if (has_diff(k - 1)) {
            const auto &div = divisors(k - 1);
            rank_in = static_cast<long>(div.size());
            for (const auto &d : div)
                if (d > 1) tors.push_back(d);
        }
        long free_rank = rank(k) - rank_out - rank_in;
        return FgAbelianGroup(free_rank, std::move(tors));
    }

  private:
    const std::vector<Int> &divisors(long k) const
    {
        auto it = divisor_cache_.find(k);
        if (it == divisor_cache_.end())
            it = divisor_cache_.emplace(k, elementary_divisors(diff(k))).first;
        return it->second;
    }
    long divisor_count(long k) const { return static_cast<long>(divisors(k).size()); }

    long lo_;
    std::vector<long> ranks_;
    std::vector<IntegerMatrix> diffs_;
    long window_lo_, window_hi_;
    mutable bool validated_ = false;
    mutable std::map<long, std::vector<Int>> divisor_cache_;
};

} // namespace extgr
