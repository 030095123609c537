// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "semitopo/core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semitopo
{

// Binary value domain. Widening it means adding enumerators and extending
// tokenOf/parseValue; nothing else depends on there being two.
enum class Value : std::uint8_t
{
    F,
    T,
};

inline constexpr Value kAllValues[] = {Value::T, Value::F};

std::string_view tokenOf(Value v);
std::optional<Value> parseValue(std::string_view token);

// Total map from the points of one semitopology to values.
class ValueAssignment
{
  public:
    // values[i] is the value of the point with index i. Throws TotalityError
    // when the length does not match the universe.
    ValueAssignment(SemiTopology const& st, std::vector<Value> values);

    // Throws TotalityError for missing points and PointOutOfUniverse for
    // unknown keys.
    static ValueAssignment fromMap(SemiTopology const& st,
                                   std::map<std::string, Value> const& map);
    static ValueAssignment constant(SemiTopology const& st, Value v);

    Value
    operator[](PointId p) const
    {
        return mValues.at(p.index);
    }
    std::size_t
    size() const
    {
        return mValues.size();
    }
    std::vector<Value> const&
    values() const
    {
        return mValues;
    }

    bool constantOn(PointSet const& s) const;

    bool operator==(ValueAssignment const&) const = default;

  private:
    explicit ValueAssignment(std::vector<Value> values)
        : mValues(std::move(values))
    {
    }
    std::vector<Value> mValues;
};

// A basis element containing p on which f is constant, if any.
std::optional<PointSet> continuityWitness(SemiTopology const& st,
                                          ValueAssignment const& f, PointId p);

bool isContinuousAt(SemiTopology const& st, ValueAssignment const& f,
                    PointId p);

// Direct quantification over every open containing p.
bool isContinuousAtOracle(SemiTopology const& st, ValueAssignment const& f,
                          PointId p,
                          std::size_t basisLimit = kDefaultOracleLimit);

struct ContinuityReport
{
    PointSet continuous;
    PointSet discontinuous;
    // Indexed by point; set exactly for continuous points.
    std::vector<std::optional<PointSet>> witness;

    bool
    everywhereContinuous() const
    {
        return discontinuous.empty();
    }
};

ContinuityReport continuityReport(SemiTopology const& st,
                                  ValueAssignment const& f);

// Runtime cross-check of the two agreement properties:
//   part 1: intertwined points at which f is continuous carry the same value;
//   part 2: if f is continuous everywhere, it is constant on each component.
// Since both properties are theorems, a counterexample means the relation,
// continuity, or component code disagree with each other.
struct Theorem1Verdict
{
    bool pass = true;
    // 1 or 2 when !pass.
    int failedPart = 0;
    std::optional<std::pair<PointId, PointId>> counterexample;
};

Theorem1Verdict checkTheorem1(SemiTopology const& st, ValueAssignment const& f);
}
