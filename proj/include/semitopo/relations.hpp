// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "semitopo/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace semitopo
{

// Two points are intertwined when no pair of disjoint opens separates them.
// A separating pair, when present, is a pair of disjoint basis elements
// containing p and q respectively.
struct IntertwinedWitness
{
    PointId p;
    PointId q;
    std::optional<std::pair<PointSet, PointSet>> separatingPair;

    bool
    intertwined() const
    {
        return !separatingPair.has_value();
    }
};

struct ComponentPartition
{
    // Pairwise disjoint, nonempty, covering the universe, ordered by least
    // member.
    std::vector<PointSet> classes;

    // Index into classes of the class containing p.
    std::size_t classOf(PointId p) const;
};

using Edge = std::pair<PointId, PointId>;

// Basis reduction: every open around p contains a basis element around p, so
// it is enough to test basis neighbourhoods pairwise.
IntertwinedWitness intertwined(SemiTopology const& st, PointId p, PointId q);

// Literal quantification over every pair of opens from enumerateOpens().
bool intertwinedOracle(SemiTopology const& st, PointId p, PointId q,
                       std::size_t basisLimit = kDefaultOracleLimit);

// All pairs p < q that are intertwined.
std::vector<Edge> intertwinedGraph(SemiTopology const& st);

// Classes of the transitive closure of the intertwined relation.
ComponentPartition components(SemiTopology const& st);
}
