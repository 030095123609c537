// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace semitopo
{

// Dense index of a point inside one semitopology. Index order coincides with
// the lexicographic order of the external identifiers.
struct PointId
{
    std::uint32_t index = 0;
    auto operator<=>(PointId const&) const = default;
};

// A finite set of points of one semitopology, stored as a fixed-width bitset
// sized to that semitopology's universe. Mixing sets of different widths is a
// programming error.
class PointSet
{
  public:
    PointSet() = default;
    explicit PointSet(std::size_t universeSize);
    PointSet(std::size_t universeSize, std::vector<PointId> const& members);

    std::size_t
    universeSize() const
    {
        return mSize;
    }

    bool contains(PointId p) const;
    void insert(PointId p);
    void erase(PointId p);

    bool empty() const;
    std::size_t size() const;

    bool isSubsetOf(PointSet const& other) const;
    bool intersects(PointSet const& other) const;

    PointSet& operator|=(PointSet const& other);
    PointSet& operator&=(PointSet const& other);
    PointSet& operator-=(PointSet const& other);

    friend PointSet
    operator|(PointSet a, PointSet const& b)
    {
        return a |= b;
    }
    friend PointSet
    operator&(PointSet a, PointSet const& b)
    {
        return a &= b;
    }
    friend PointSet
    operator-(PointSet a, PointSet const& b)
    {
        return a -= b;
    }

    // Members in increasing index order.
    std::vector<PointId> members() const;

    // Least member; the set must be nonempty.
    PointId front() const;

    bool operator==(PointSet const& other) const = default;

    // Canonical order: lexicographic comparison of the sorted member
    // sequences, so {a} < {a,b} < {b}.
    std::strong_ordering canonicalCompare(PointSet const& other) const;

    std::size_t hash() const;

  private:
    std::size_t mSize = 0;
    std::vector<std::uint64_t> mWords;
};

struct CanonicalLess
{
    bool
    operator()(PointSet const& a, PointSet const& b) const
    {
        return a.canonicalCompare(b) < 0;
    }
};

struct PointSetHash
{
    std::size_t
    operator()(PointSet const& s) const
    {
        return s.hash();
    }
};
}
