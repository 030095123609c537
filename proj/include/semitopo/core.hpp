// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "semitopo/errors.hpp"
#include "semitopo/point_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace semitopo
{

enum class CoverageRepair
{
    // Uncovered points raise CoverageViolation.
    None,
    // Uncovered points cause the whole universe to be added as a basis
    // element.
    AddUniverse,
};

////////////////////////////////////////////////////////////////////////////////
// SemiTopology
////////////////////////////////////////////////////////////////////////////////
//
// A finite set of points together with a basis: a family of coalitions whose
// arbitrary unions are the open sets. Only the basis is stored. The open family
// can be exponentially larger and is only materialized by enumerateOpens().
//
// Construction canonicalizes: identifiers are sorted lexicographically and
// assigned dense indices in that order, empty basis elements are dropped,
// duplicate basis elements are merged, and the basis is kept in canonical
// order. Every point must lie in some basis element, which is exactly what
// makes the whole universe open.
//
// Instances are immutable after construction.
class SemiTopology
{
  public:
    using Row = std::vector<std::string>;

    SemiTopology(std::vector<std::string> points, std::vector<Row> const& basis,
                 CoverageRepair repair = CoverageRepair::None);

    std::size_t
    size() const
    {
        return mNames.size();
    }

    std::vector<std::string> const&
    names() const
    {
        return mNames;
    }

    std::string const& name(PointId p) const;

    std::optional<PointId> find(std::string const& name) const;
    // Throws PointOutOfUniverse.
    PointId id(std::string const& name) const;
    PointSet makeSet(std::span<std::string const> names) const;
    PointSet makeSet(std::initializer_list<std::string> names) const;

    PointSet
    emptySet() const
    {
        return PointSet(size());
    }
    PointSet const&
    universe() const
    {
        return mUniverse;
    }

    // Basis elements, nonempty and in canonical order.
    std::vector<PointSet> const&
    basis() const
    {
        return mBasis;
    }

    // Indices into basis() of the elements containing p, ascending.
    std::vector<std::size_t> const& neighborhoodIndices(PointId p) const;

    // Throws PointOutOfUniverse if p is not an index of this universe.
    void checkPoint(PointId p) const;
    void checkSet(PointSet const& s) const;

    std::vector<std::string> render(PointSet const& s) const;
    // "{a,b,c}"
    std::string format(PointSet const& s) const;

    bool operator==(SemiTopology const& other) const;

  private:
    std::vector<std::string> mNames;
    std::unordered_map<std::string, PointId> mIndex;
    PointSet mUniverse;
    std::vector<PointSet> mBasis;
    std::vector<std::vector<std::size_t>> mNeighborhoods;
};

// Same as the SemiTopology constructor; named after the operation it
// implements.
SemiTopology newSemitopology(std::vector<std::string> points,
                             std::vector<SemiTopology::Row> const& basis,
                             CoverageRepair repair = CoverageRepair::None);

// s is open iff it equals the union of all basis elements it contains.
bool isOpen(SemiTopology const& st, PointSet const& s);

constexpr std::size_t kDefaultOracleLimit = 20;

// Brute force: every union of a subfamily of the basis, deduplicated and in
// canonical order. Always contains the empty set and the universe.
std::vector<PointSet> enumerateOpens(SemiTopology const& st,
                                     std::size_t basisLimit = kDefaultOracleLimit);

// The basis elements containing p, in canonical order.
std::vector<PointSet> neighborhoodBasis(SemiTopology const& st, PointId p);
}
