// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/point_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace semitopo
{

namespace
{
constexpr std::size_t kWordBits = 64;

std::size_t
wordsFor(std::size_t n)
{
    return (n + kWordBits - 1) / kWordBits;
}
}

PointSet::PointSet(std::size_t universeSize)
    : mSize(universeSize), mWords(wordsFor(universeSize), 0)
{
}

PointSet::PointSet(std::size_t universeSize, std::vector<PointId> const& members)
    : PointSet(universeSize)
{
    for (auto p : members)
    {
        insert(p);
    }
}

bool
PointSet::contains(PointId p) const
{
    assert(p.index < mSize);
    return (mWords[p.index / kWordBits] >> (p.index % kWordBits)) & 1U;
}

void
PointSet::insert(PointId p)
{
    assert(p.index < mSize);
    mWords[p.index / kWordBits] |= std::uint64_t{1} << (p.index % kWordBits);
}

void
PointSet::erase(PointId p)
{
    assert(p.index < mSize);
    mWords[p.index / kWordBits] &= ~(std::uint64_t{1} << (p.index % kWordBits));
}

bool
PointSet::empty() const
{
    return std::all_of(mWords.begin(), mWords.end(),
                       [](std::uint64_t w) { return w == 0; });
}

std::size_t
PointSet::size() const
{
    std::size_t n = 0;
    for (auto w : mWords)
    {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool
PointSet::isSubsetOf(PointSet const& other) const
{
    assert(mSize == other.mSize);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        if (mWords[i] & ~other.mWords[i])
        {
            return false;
        }
    }
    return true;
}

bool
PointSet::intersects(PointSet const& other) const
{
    assert(mSize == other.mSize);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        if (mWords[i] & other.mWords[i])
        {
            return true;
        }
    }
    return false;
}

PointSet&
PointSet::operator|=(PointSet const& other)
{
    assert(mSize == other.mSize);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        mWords[i] |= other.mWords[i];
    }
    return *this;
}

PointSet&
PointSet::operator&=(PointSet const& other)
{
    assert(mSize == other.mSize);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        mWords[i] &= other.mWords[i];
    }
    return *this;
}

PointSet&
PointSet::operator-=(PointSet const& other)
{
    assert(mSize == other.mSize);
    for (std::size_t i = 0; i < mWords.size(); ++i)
    {
        mWords[i] &= ~other.mWords[i];
    }
    return *this;
}

std::vector<PointId>
PointSet::members() const
{
    std::vector<PointId> out;
    for (std::size_t w = 0; w < mWords.size(); ++w)
    {
        auto bits = mWords[w];
        while (bits)
        {
            auto bit = static_cast<std::size_t>(std::countr_zero(bits));
            out.push_back(PointId{static_cast<std::uint32_t>(w * kWordBits + bit)});
            bits &= bits - 1;
        }
    }
    return out;
}

PointId
PointSet::front() const
{
    for (std::size_t w = 0; w < mWords.size(); ++w)
    {
        if (mWords[w])
        {
            return PointId{static_cast<std::uint32_t>(
                w * kWordBits + static_cast<std::size_t>(std::countr_zero(mWords[w])))};
        }
    }
    assert(false && "front() of empty PointSet");
    return PointId{};
}

std::strong_ordering
PointSet::canonicalCompare(PointSet const& other) const
{
    auto a = members();
    auto b = other.members();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                  b.end());
}

std::size_t
PointSet::hash() const
{
    // FNV-1a over the words.
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : mWords)
    {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ mSize);
}
}
