#pragma once

#include "extgr/abelian_group.hpp"
#include "extgr/integer_matrix.hpp"
#include "extgr/permutation.hpp"
#include "extgr/surjection_prop.hpp"
#include "extgr/tables.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace extgr {

using nlohmann::json;

// {rows, cols, entries: [[r, c, v], ...]}; values that fit in 64 bits are
// emitted as numbers, larger ones as decimal strings.
inline json to_json(const IntegerMatrix &m)
{
    json entries = json::array();
    for (const auto &[k, v] : m.entries()) {
        json val;
        if (v.fits_slong_p())
            val = static_cast<long>(v.get_si());
        else
            val = v.get_str();
        entries.push_back(json::array({k.first, k.second, val}));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline IntegerMatrix integer_matrix_from_json(const json &j)
{
    IntegerMatrix m(j.at("rows").get<long>(), j.at("cols").get<long>());
    for (const auto &e : j.at("entries")) {
        Int v = e.at(2).is_string() ? Int(e.at(2).get<std::string>()) : Int(e.at(2).get<long>());
        m.set(e.at(0).get<long>(), e.at(1).get<long>(), v);
    }
    return m;
}

inline json to_json(const FgAbelianGroup &g)
{
    json tors = json::array();
    for (const auto &d : g.torsion) tors.push_back(d.get_str());
    return json{{"free_rank", g.free_rank}, {"torsion", tors}};
}

// surjections serialize as their value arrays (1-based)
inline json to_json(const Surjection &f)
{
    return json{{"m", f.m}, {"n", f.n}, {"values", f.values}};
}

inline Surjection surjection_from_json(const json &j)
{
    if (j.is_array()) {
        std::vector<int> vals = j.get<std::vector<int>>();
        int n = 0;
        for (int v : vals) n = std::max(n, v);
        return {static_cast<int>(vals.size()), n, vals};
    }
    return {j.at("m").get<int>(), j.at("n").get<int>(), j.at("values").get<std::vector<int>>()};
}

inline json to_json(const SignedSurjSum &s)
{
    json terms = json::array();
    for (const auto &[f, c] : s.terms()) {
        json val;
        if (c.fits_slong_p())
            val = static_cast<long>(c.get_si());
        else
            val = c.get_str();
        terms.push_back(json{{"f", f.values}, {"c", val}});
    }
    return json{{"m", s.source_size()}, {"n", s.target_size()}, {"degree", s.degree()}, {"terms", terms}};
}

inline SignedSurjSum signed_sum_from_json(const json &j)
{
    SignedSurjSum s(j.at("m").get<int>(), j.at("n").get<int>());
    for (const auto &t : j.at("terms")) {
        std::vector<int> vals = t.at("f").get<std::vector<int>>();
        Int c = t.at("c").is_string() ? Int(t.at("c").get<std::string>()) : Int(t.at("c").get<long>());
        s.add(Surjection(s.source_size(), s.target_size(), vals), c);
    }
    return s;
}

inline json to_json(const ExtTableEntry &e)
{
    return json{{"source", e.source.to_string()},
                {"target", e.target.to_string()},
                {"degree", e.degree},
                {"dimension", e.dimension}};
}

} // namespace extgr
