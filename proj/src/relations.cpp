// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/relations.hpp"
#include "union_find.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace semitopo
{

std::size_t
ComponentPartition::classOf(PointId p) const
{
    for (std::size_t i = 0; i < classes.size(); ++i)
    {
        if (classes[i].universeSize() > p.index && classes[i].contains(p))
        {
            return i;
        }
    }
    assert(false && "point not covered by partition");
    return classes.size();
}

IntertwinedWitness
intertwined(SemiTopology const& st, PointId p, PointId q)
{
    IntertwinedWitness w{p, q, std::nullopt};
    auto const& basis = st.basis();
    for (auto i : st.neighborhoodIndices(p))
    {
        for (auto j : st.neighborhoodIndices(q))
        {
            if (!basis[i].intersects(basis[j]))
            {
                w.separatingPair.emplace(basis[i], basis[j]);
                return w;
            }
        }
    }
    return w;
}

bool
intertwinedOracle(SemiTopology const& st, PointId p, PointId q,
                  std::size_t basisLimit)
{
    st.checkPoint(p);
    st.checkPoint(q);
    auto opens = enumerateOpens(st, basisLimit);
    for (auto const& o : opens)
    {
        if (!o.contains(p))
        {
            continue;
        }
        for (auto const& o2 : opens)
        {
            if (o2.contains(q) && !o.intersects(o2))
            {
                return false;
            }
        }
    }
    return true;
}

std::vector<Edge>
intertwinedGraph(SemiTopology const& st)
{
    auto const n = static_cast<std::uint32_t>(st.size());
    auto const& basis = st.basis();

    // Row b of disjoint holds the basis elements disjoint from basis element b.
    std::vector<std::vector<bool>> disjoint(basis.size(),
                                            std::vector<bool>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
    {
        for (std::size_t j = i + 1; j < basis.size(); ++j)
        {
            bool d = !basis[i].intersects(basis[j]);
            disjoint[i][j] = d;
            disjoint[j][i] = d;
        }
    }

    std::vector<Edge> edges;
    for (std::uint32_t a = 0; a < n; ++a)
    {
        auto const& na = st.neighborhoodIndices(PointId{a});
        for (std::uint32_t b = a + 1; b < n; ++b)
        {
            auto const& nb = st.neighborhoodIndices(PointId{b});
            bool separated = std::any_of(na.begin(), na.end(), [&](auto i) {
                return std::any_of(nb.begin(), nb.end(),
                                   [&](auto j) { return disjoint[i][j]; });
            });
            if (!separated)
            {
                edges.emplace_back(PointId{a}, PointId{b});
            }
        }
    }
    return edges;
}

ComponentPartition
components(SemiTopology const& st)
{
    UnionFind uf(st.size());
    for (auto const& [a, b] : intertwinedGraph(st))
    {
        uf.unite(a.index, b.index);
    }

    // Points are visited in index order, so classes come out ordered by their
    // least member.
    ComponentPartition out;
    std::vector<std::size_t> slot(st.size(), SIZE_MAX);
    for (std::uint32_t p = 0; p < st.size(); ++p)
    {
        auto root = uf.find(p);
        if (slot[root] == SIZE_MAX)
        {
            slot[root] = out.classes.size();
            out.classes.push_back(st.emptySet());
        }
        out.classes[slot[root]].insert(PointId{p});
    }
    return out;
}
}
