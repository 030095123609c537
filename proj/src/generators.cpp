// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/generators.hpp"

#include <limits>
#include <stdexcept>

namespace semitopo
{

namespace
{
std::vector<std::string>
numbered(std::size_t n, std::string const& prefix = "")
{
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

void
requirePositive(std::size_t n, char const* what)
{
    if (n == 0)
    {
        throw std::invalid_argument(std::string(what) + " must be >= 1");
    }
}

// All size-k subsets of names, in lexicographic order of index tuples.
void
combinations(std::vector<std::string> const& names, std::size_t k,
             std::vector<SemiTopology::Row>& out)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
    {
        idx[i] = i;
    }
    auto const n = names.size();
    while (true)
    {
        SemiTopology::Row row;
        for (auto i : idx)
        {
            row.push_back(names[i]);
        }
        out.push_back(std::move(row));

        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
        {
            --i;
        }
        if (i == 0)
        {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
        {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
}

SemiTopology
majority(std::size_t n)
{
    requirePositive(n, "majority size");
    auto names = numbered(n, "p");
    std::vector<SemiTopology::Row> basis;
    combinations(names, n / 2 + 1, basis);
    return SemiTopology(std::move(names), basis);
}

SemiTopology
zWindow(std::size_t k)
{
    requirePositive(k, "window size");
    std::vector<SemiTopology::Row> basis;
    for (std::size_t i = 0; i < k; ++i)
    {
        basis.push_back({std::to_string(2 * i), std::to_string(2 * i + 1),
                         std::to_string(2 * i + 2)});
    }
    return SemiTopology(numbered(2 * k + 1), basis);
}

SemiTopology
discrete(std::size_t n)
{
    requirePositive(n, "point count");
    auto names = numbered(n);
    std::vector<SemiTopology::Row> basis;
    for (auto const& p : names)
    {
        basis.push_back({p});
    }
    return SemiTopology(std::move(names), basis);
}

SemiTopology
withPrefix(SemiTopology const& st, std::string const& prefix)
{
    std::vector<std::string> points;
    for (auto const& n : st.names())
    {
        points.push_back(prefix + n);
    }
    std::vector<SemiTopology::Row> basis;
    for (auto const& b : st.basis())
    {
        SemiTopology::Row row;
        for (auto const& n : st.render(b))
        {
            row.push_back(prefix + n);
        }
        basis.push_back(std::move(row));
    }
    return SemiTopology(std::move(points), basis);
}

SemiTopology
bridge(SemiTopology const& e, SemiTopology const& t, std::string const& r,
       BridgeConvention convention)
{
    for (auto const& name : e.names())
    {
        if (t.find(name))
        {
            throw UniverseOverlap("point '" + name + "' is in both universes");
        }
    }
    if (e.find(r) || t.find(r))
    {
        throw BridgePointCollision("bridging point '" + r +
                                   "' already names a point");
    }

    std::vector<std::string> points = e.names();
    points.insert(points.end(), t.names().begin(), t.names().end());
    points.push_back(r);

    std::vector<SemiTopology::Row> eRows;
    std::vector<SemiTopology::Row> tRows;
    for (auto const& b : e.basis())
    {
        eRows.push_back(e.render(b));
    }
    for (auto const& b : t.basis())
    {
        tRows.push_back(t.render(b));
    }

    std::vector<SemiTopology::Row> basis = eRows;
    basis.insert(basis.end(), tRows.begin(), tRows.end());
    for (auto const& be : eRows)
    {
        for (auto const& bt : tRows)
        {
            SemiTopology::Row row = be;
            row.push_back(r);
            row.insert(row.end(), bt.begin(), bt.end());
            basis.push_back(std::move(row));
        }
    }
    if (convention == BridgeConvention::LiteralSetBuilder)
    {
        basis.push_back({r});
        for (auto const& be : eRows)
        {
            auto row = be;
            row.push_back(r);
            basis.push_back(std::move(row));
        }
        for (auto const& bt : tRows)
        {
            auto row = bt;
            row.push_back(r);
            basis.push_back(std::move(row));
        }
    }
    return SemiTopology(std::move(points), basis);
}

std::uint64_t
uniformBelow(Rng& rng, std::uint64_t bound)
{
    if (bound == 0)
    {
        throw std::invalid_argument("uniformBelow: bound must be positive");
    }
    auto const max = std::numeric_limits<std::uint64_t>::max();
    // Largest multiple of bound, minus one, that fits.
    auto const limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do
    {
        x = rng();
    } while (x > limit);
    return x % bound;
}

SemiTopology
randomSemitopology(std::size_t n, std::size_t m, std::uint64_t seed)
{
    requirePositive(n, "point count");
    requirePositive(m, "basis size");
    Rng rng(seed);
    auto names = numbered(n);

    std::vector<SemiTopology::Row> basis;
    std::vector<bool> covered(n, false);
    for (std::size_t b = 0; b < m; ++b)
    {
        SemiTopology::Row row;
        while (row.empty())
        {
            for (std::size_t p = 0; p < n; ++p)
            {
                if (rng() >> 63)
                {
                    row.push_back(names[p]);
                    covered[p] = true;
                }
            }
        }
        basis.push_back(std::move(row));
    }
    for (std::size_t p = 0; p < n; ++p)
    {
        if (!covered[p])
        {
            basis.push_back({names[p]});
        }
    }
    return SemiTopology(std::move(names), basis);
}
}
