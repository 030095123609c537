// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace semitopo
{

// Union by rank with path compression.
class UnionFind
{
  public:
    explicit UnionFind(std::size_t n) : mParent(n), mRank(n, 0)
    {
        std::iota(mParent.begin(), mParent.end(), std::size_t{0});
    }

    std::size_t
    find(std::size_t x)
    {
        while (mParent[x] != x)
        {
            mParent[x] = mParent[mParent[x]];
            x = mParent[x];
        }
        return x;
    }

    void
    unite(std::size_t x, std::size_t y)
    {
        auto px = find(x);
        auto py = find(y);
        if (px == py)
        {
            return;
        }
        if (mRank[px] < mRank[py])
        {
            std::swap(px, py);
        }
        mParent[py] = px;
        if (mRank[px] == mRank[py])
        {
            ++mRank[px];
        }
    }

  private:
    std::vector<std::size_t> mParent;
    std::vector<std::size_t> mRank;
};
}
