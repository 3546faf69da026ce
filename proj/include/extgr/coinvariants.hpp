#pragma once

#include "extgr/permutation.hpp"
#include "extgr/surjection.hpp"
#include "extgr/surjection_prop.hpp"

#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace extgr {

// A subgroup of S_n x S_m acting on a set of surjections by
// (sigma', sigma'') . f = sigma' ∘ f ∘ sigma''^{-1}, together with a sign
// cocycle alpha. The coinvariant space Q[E]_G has one dimension per orbit
// whose stabilizer acts with alpha identically +1.
struct SignedGroupAction {
    enum class Group { Trivial, LeftFactor, RightFactor, FullProduct, Explicit };

    std::vector<Surjection> carrier;
    int n = 0; // left factor degree (acts by postcomposition)
    int m = 0; // right factor degree (acts by precomposition)
    Group group = Group::Trivial;
    std::vector<std::pair<Perm, Perm>> explicit_elements; // generators when group == Explicit
    std::function<int(const Perm &, const Perm &, const Surjection &)> alpha;

    Surjection act(const Perm &left, const Perm &right, const Surjection &f) const
    {
        Surjection fr = compose(f, Surjection::from_permutation(perm_inverse(right)));
        return compose(Surjection::from_permutation(left), fr);
    }
};

namespace detail {

inline std::vector<std::pair<Perm, Perm>> action_generators(const SignedGroupAction &a)
{
    std::vector<std::pair<Perm, Perm>> gens;
    Perm idn = perm_identity(a.n), idm = perm_identity(a.m);
    auto add_left = [&] {
        for (int k = 1; k < a.n; ++k) gens.emplace_back(transposition(a.n, k, k + 1), idm);
    };
    auto add_right = [&] {
        for (int k = 1; k < a.m; ++k) gens.emplace_back(idn, transposition(a.m, k, k + 1));
    };
    switch (a.group) {
    case SignedGroupAction::Group::Trivial: break;
    case SignedGroupAction::Group::LeftFactor: add_left(); break;
    case SignedGroupAction::Group::RightFactor: add_right(); break;
    case SignedGroupAction::Group::FullProduct:
        add_left();
        add_right();
        break;
    case SignedGroupAction::Group::Explicit: gens = a.explicit_elements; break;
    }
    return gens;
}

// full closure of an explicit generator list (small groups only)
inline std::vector<std::pair<Perm, Perm>> close_group(const SignedGroupAction &a, size_t cap = 200000)
{
    std::map<std::pair<Perm, Perm>, bool> seen;
    std::pair<Perm, Perm> id{perm_identity(a.n), perm_identity(a.m)};
    std::queue<std::pair<Perm, Perm>> work;
    seen[id] = true;
    work.push(id);
    auto gens = action_generators(a);
    while (!work.empty()) {
        auto g = work.front();
        work.pop();
        for (const auto &h : gens) {
            std::pair<Perm, Perm> gh{perm_compose(h.first, g.first), perm_compose(h.second, g.second)};
            if (seen.emplace(gh, true).second) {
                if (seen.size() > cap) throw std::runtime_error("group closure exceeds the cap");
                work.push(gh);
            }
        }
    }
    std::vector<std::pair<Perm, Perm>> out;
    out.reserve(seen.size());
    for (const auto &[g, _] : seen) out.push_back(g);
    return out;
}

// Stabilizer generators of f for the structured groups: within-fiber
// transpositions on the right factor, and for the full product the pairs
// (tau_{i,j}, alpha^{-1} T_{i,j} alpha) swapping equal-size fibers, where
// T_{i,j} is the block transposition in the canonical decomposition frame.
inline std::vector<std::pair<Perm, Perm>> stabilizer_generators(const SignedGroupAction &a,
                                                                const Surjection &f)
{
    std::vector<std::pair<Perm, Perm>> gens;
    Perm idn = perm_identity(a.n), idm = perm_identity(a.m);

    const bool right_active = a.group == SignedGroupAction::Group::RightFactor ||
                              a.group == SignedGroupAction::Group::FullProduct;
    const bool left_active = a.group == SignedGroupAction::Group::LeftFactor ||
                             a.group == SignedGroupAction::Group::FullProduct;

    if (right_active) {
        for (int k = 1; k <= f.n; ++k) {
            auto fib = f.fiber(k);
            for (size_t t = 0; t + 1 < fib.size(); ++t)
                gens.emplace_back(idn, transposition(a.m, fib[t], fib[t + 1]));
        }
    }
    if (left_active && a.group == SignedGroupAction::Group::FullProduct) {
        auto dec = canonical_decomposition(f);
        auto sizes = f.fiber_sizes();
        // block offsets of the order-preserving part
        std::vector<int> off(f.n + 1, 0);
        for (int k = 1; k <= f.n; ++k) off[k] = off[k - 1] + sizes[k - 1];
        Perm alpha_inv = perm_inverse(dec.alpha);
        for (int i = 1; i <= f.n; ++i)
            for (int j = i + 1; j <= f.n; ++j) {
                if (sizes[i - 1] != sizes[j - 1]) continue;
                // block transposition of s^{-1}(i) and s^{-1}(j)
                Perm t = perm_identity(a.m);
                for (int u = 0; u < sizes[i - 1]; ++u) {
                    t[off[i - 1] + u] = off[j - 1] + u + 1;
                    t[off[j - 1] + u] = off[i - 1] + u + 1;
                }
                Perm right = perm_compose(alpha_inv, perm_compose(t, dec.alpha));
                gens.emplace_back(transposition(a.n, i, j), std::move(right));
            }
    }
    if (left_active && a.group == SignedGroupAction::Group::LeftFactor) {
        // postcomposition alone never fixes a surjection except identically
    }
    return gens;
}

} // namespace detail

// Dimension of the signed coinvariants: orbits of the carrier whose
// stabilizer has alpha == +1 on all of its elements (checked on stabilizer
// generators; alpha restricted to a stabilizer is a homomorphism).
inline long coinvariants_dimension(const SignedGroupAction &a)
{
    std::map<Surjection, long> index;
    for (size_t i = 0; i < a.carrier.size(); ++i) index[a.carrier[i]] = static_cast<long>(i);

    auto gens = detail::action_generators(a);

    // orbits by BFS over generator moves
    std::vector<long> orbit(a.carrier.size(), -1);
    long next_orbit = 0;
    std::vector<std::vector<long>> orbit_members;
    for (size_t i = 0; i < a.carrier.size(); ++i) {
        if (orbit[i] >= 0) continue;
        std::vector<long> members;
        std::queue<long> work;
        orbit[i] = next_orbit;
        work.push(static_cast<long>(i));
        while (!work.empty()) {
            long x = work.front();
            work.pop();
            members.push_back(x);
            for (const auto &[l, r] : gens) {
                Surjection y = a.act(l, r, a.carrier[x]);
                auto it = index.find(y);
                if (it == index.end()) throw std::runtime_error("carrier is not closed under the action");
                if (orbit[it->second] < 0) {
                    orbit[it->second] = next_orbit;
                    work.push(it->second);
                }
            }
        }
        orbit_members.push_back(std::move(members));
        ++next_orbit;
    }

    long dim = 0;
    const bool structured = a.group != SignedGroupAction::Group::Explicit;
    std::vector<std::pair<Perm, Perm>> whole_group;
    if (!structured) whole_group = detail::close_group(a);

    for (const auto &members : orbit_members) {
        const Surjection &rep = a.carrier[members.front()];
        bool ok = true;
        if (structured) {
            for (const auto &[l, r] : detail::stabilizer_generators(a, rep)) {
                if (a.act(l, r, rep) != rep) throw std::runtime_error("stabilizer generator does not stabilize");
                if (a.alpha(l, r, rep) != 1) {
                    ok = false;
                    break;
                }
            }
        } else {
            for (const auto &[l, r] : whole_group) {
                if (a.act(l, r, rep) != rep) continue;
                if (a.alpha(l, r, rep) != 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++dim;
    }
    return dim;
}

} // namespace extgr
