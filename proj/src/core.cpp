// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/core.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace semitopo
{

namespace
{
void
validateId(std::string const& id)
{
    if (id.empty())
    {
        throw InvalidPointId("point identifier is empty");
    }
    for (unsigned char c : id)
    {
        if (std::isspace(c))
        {
            throw InvalidPointId("point identifier '" + id +
                                 "' contains whitespace");
        }
    }
}
}

SemiTopology::SemiTopology(std::vector<std::string> points,
                           std::vector<Row> const& basis, CoverageRepair repair)
    : mNames(std::move(points))
{
    for (auto const& id : mNames)
    {
        validateId(id);
    }
    std::sort(mNames.begin(), mNames.end());
    auto dup = std::adjacent_find(mNames.begin(), mNames.end());
    if (dup != mNames.end())
    {
        throw InvalidPointId("duplicate point identifier '" + *dup + "'");
    }
    for (std::size_t i = 0; i < mNames.size(); ++i)
    {
        mIndex.emplace(mNames[i], PointId{static_cast<std::uint32_t>(i)});
    }

    mUniverse = PointSet(size());
    for (std::size_t i = 0; i < size(); ++i)
    {
        mUniverse.insert(PointId{static_cast<std::uint32_t>(i)});
    }

    std::unordered_set<PointSet, PointSetHash> seen;
    PointSet covered(size());
    for (auto const& row : basis)
    {
        PointSet s(size());
        for (auto const& id : row)
        {
            auto it = mIndex.find(id);
            if (it == mIndex.end())
            {
                throw BasisOutOfUniverse(id);
            }
            s.insert(it->second);
        }
        if (s.empty() || !seen.insert(s).second)
        {
            continue;
        }
        covered |= s;
        mBasis.push_back(std::move(s));
    }

    if (covered != mUniverse)
    {
        if (repair == CoverageRepair::None)
        {
            throw CoverageViolation(render(mUniverse - covered));
        }
        if (seen.insert(mUniverse).second)
        {
            mBasis.push_back(mUniverse);
        }
    }

    std::sort(mBasis.begin(), mBasis.end(), CanonicalLess{});

    mNeighborhoods.resize(size());
    for (std::size_t b = 0; b < mBasis.size(); ++b)
    {
        for (auto p : mBasis[b].members())
        {
            mNeighborhoods[p.index].push_back(b);
        }
    }
}

SemiTopology
newSemitopology(std::vector<std::string> points,
                std::vector<SemiTopology::Row> const& basis, CoverageRepair repair)
{
    return SemiTopology(std::move(points), basis, repair);
}

std::string const&
SemiTopology::name(PointId p) const
{
    checkPoint(p);
    return mNames[p.index];
}

std::optional<PointId>
SemiTopology::find(std::string const& name) const
{
    auto it = mIndex.find(name);
    if (it == mIndex.end())
    {
        return std::nullopt;
    }
    return it->second;
}

PointId
SemiTopology::id(std::string const& name) const
{
    auto p = find(name);
    if (!p)
    {
        throw PointOutOfUniverse(name);
    }
    return *p;
}

PointSet
SemiTopology::makeSet(std::span<std::string const> names) const
{
    PointSet s(size());
    for (auto const& n : names)
    {
        s.insert(id(n));
    }
    return s;
}

PointSet
SemiTopology::makeSet(std::initializer_list<std::string> names) const
{
    return makeSet(std::span<std::string const>(names.begin(), names.size()));
}

std::vector<std::size_t> const&
SemiTopology::neighborhoodIndices(PointId p) const
{
    checkPoint(p);
    return mNeighborhoods[p.index];
}

void
SemiTopology::checkPoint(PointId p) const
{
    if (p.index >= size())
    {
        throw PointOutOfUniverse("#" + std::to_string(p.index));
    }
}

void
SemiTopology::checkSet(PointSet const& s) const
{
    if (s.universeSize() != size())
    {
        throw PointOutOfUniverse("set built for a universe of " +
                                 std::to_string(s.universeSize()) + " points");
    }
}

std::vector<std::string>
SemiTopology::render(PointSet const& s) const
{
    std::vector<std::string> out;
    for (auto p : s.members())
    {
        out.push_back(mNames[p.index]);
    }
    return out;
}

std::string
SemiTopology::format(PointSet const& s) const
{
    std::string out = "{";
    bool first = true;
    for (auto p : s.members())
    {
        if (!first)
        {
            out += ',';
        }
        first = false;
        out += mNames[p.index];
    }
    return out + "}";
}

bool
SemiTopology::operator==(SemiTopology const& other) const
{
    return mNames == other.mNames && mBasis == other.mBasis;
}

bool
isOpen(SemiTopology const& st, PointSet const& s)
{
    st.checkSet(s);
    PointSet covered = st.emptySet();
    for (auto const& b : st.basis())
    {
        if (b.isSubsetOf(s))
        {
            covered |= b;
        }
    }
    return covered == s;
}

std::vector<PointSet>
enumerateOpens(SemiTopology const& st, std::size_t basisLimit)
{
    if (st.basis().size() > basisLimit)
    {
        throw OracleLimitExceeded(st.basis().size(), basisLimit);
    }
    // Closure of {∅} under "add one basis element", which reaches the union
    // of every subfamily.
    std::unordered_set<PointSet, PointSetHash> opens{st.emptySet()};
    for (auto const& b : st.basis())
    {
        std::vector<PointSet> fresh;
        for (auto const& o : opens)
        {
            fresh.push_back(o | b);
        }
        opens.insert(fresh.begin(), fresh.end());
    }
    std::vector<PointSet> out(opens.begin(), opens.end());
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<PointSet>
neighborhoodBasis(SemiTopology const& st, PointId p)
{
    std::vector<PointSet> out;
    for (auto b : st.neighborhoodIndices(p))
    {
        out.push_back(st.basis()[b]);
    }
    return out;
}
}
