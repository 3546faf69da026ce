#pragma once

#include "extgr/arith.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace extgr {

// Finitely generated abelian group: free rank plus torsion coefficients
// d_1 | d_2 | ... with every d_i >= 2. The output language of all integral
// cohomology computations.
struct FgAbelianGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    FgAbelianGroup() = default;
    FgAbelianGroup(long rank, std::vector<Int> tors) : free_rank(rank), torsion(std::move(tors))
    {
        if (free_rank < 0) throw std::invalid_argument("negative free rank");
        for (size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw std::invalid_argument("torsion coefficient < 2");
            if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
                throw std::invalid_argument("torsion coefficients violate divisibility chain");
        }
    }

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool is_free_of_rank(long r) const { return free_rank == r && torsion.empty(); }

    bool operator==(const FgAbelianGroup &o) const
    {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const FgAbelianGroup &o) const { return !(*this == o); }

    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank == 1) {
            os << "Z";
            first = false;
        } else if (free_rank > 1) {
            os << "Z^" << free_rank;
            first = false;
        }
        for (const auto &d : torsion) {
            if (!first) os << " + ";
            os << "Z/" << d.get_str();
            first = false;
        }
        return os.str();
    }
};

} // namespace extgr
