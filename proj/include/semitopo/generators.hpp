// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "semitopo/core.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace semitopo
{

// Points p0..p(n-1); basis is every subset of size floor(n/2)+1. Unions of
// minimal majorities are exactly the majorities.
SemiTopology majority(std::size_t n);

// Points 0..2k; basis is the triples {2i, 2i+1, 2i+2} for 0 <= i < k. A finite
// window onto the even-anchored triples over the integers.
SemiTopology zWindow(std::size_t k);

// Points 0..n-1; basis is all singletons.
SemiTopology discrete(std::size_t n);

// Same structure with every identifier prefixed, e.g. to make two copies of
// one family disjoint before bridging them.
SemiTopology withPrefix(SemiTopology const& st, std::string const& prefix);

enum class BridgeConvention
{
    // Bridge coalitions are Be ∪ {r} ∪ Bt with both sides nonempty: r can
    // only act together with a coalition from each side.
    NonemptySides,
    // The set-builder taken literally, with either side allowed to be the
    // empty open. Adds Be ∪ {r}, {r} ∪ Bt and {r} to the basis.
    LiteralSetBuilder,
};

// Joins e and t through a fresh bridging point r. Throws UniverseOverlap if e
// and t share an identifier and BridgePointCollision if r names a point of
// either.
SemiTopology bridge(SemiTopology const& e, SemiTopology const& t,
                    std::string const& r,
                    BridgeConvention convention = BridgeConvention::NonemptySides);

// The generator behind every randomized routine: the 64-bit Mersenne Twister
// (std::mt19937_64), whose output sequence is fixed by the C++ standard.
// Bounded draws use rejection sampling (see uniformBelow) rather than
// std::uniform_int_distribution, whose algorithm is implementation-defined.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). Discards draws >= the largest multiple of
// bound that fits in 64 bits, then reduces modulo bound.
std::uint64_t uniformBelow(Rng& rng, std::uint64_t bound);

// Points 0..n-1 and m random nonempty basis sets. Each set includes each point
// independently when the top bit of one draw is set; an empty draw is
// redrawn. Uncovered points are then covered by adding their singletons.
SemiTopology randomSemitopology(std::size_t n, std::size_t m, std::uint64_t seed);
}
