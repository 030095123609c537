// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/valuation.hpp"
#include "semitopo/relations.hpp"

namespace semitopo
{

std::string_view
tokenOf(Value v)
{
    return v == Value::T ? "T" : "F";
}

std::optional<Value>
parseValue(std::string_view token)
{
    if (token == "T")
    {
        return Value::T;
    }
    if (token == "F")
    {
        return Value::F;
    }
    return std::nullopt;
}

ValueAssignment::ValueAssignment(SemiTopology const& st, std::vector<Value> values)
    : mValues(std::move(values))
{
    if (mValues.size() != st.size())
    {
        std::vector<std::string> missing;
        for (std::size_t i = mValues.size(); i < st.size(); ++i)
        {
            missing.push_back(st.names()[i]);
        }
        if (missing.empty())
        {
            throw PointOutOfUniverse("#" + std::to_string(st.size()));
        }
        throw TotalityError(std::move(missing));
    }
}

ValueAssignment
ValueAssignment::fromMap(SemiTopology const& st,
                         std::map<std::string, Value> const& map)
{
    for (auto const& [name, v] : map)
    {
        st.id(name);
    }
    std::vector<Value> values;
    std::vector<std::string> missing;
    for (auto const& name : st.names())
    {
        auto it = map.find(name);
        if (it == map.end())
        {
            missing.push_back(name);
            continue;
        }
        values.push_back(it->second);
    }
    if (!missing.empty())
    {
        throw TotalityError(std::move(missing));
    }
    return ValueAssignment(std::move(values));
}

ValueAssignment
ValueAssignment::constant(SemiTopology const& st, Value v)
{
    return ValueAssignment(std::vector<Value>(st.size(), v));
}

bool
ValueAssignment::constantOn(PointSet const& s) const
{
    auto members = s.members();
    for (auto p : members)
    {
        if ((*this)[p] != (*this)[members.front()])
        {
            return false;
        }
    }
    return true;
}

std::optional<PointSet>
continuityWitness(SemiTopology const& st, ValueAssignment const& f, PointId p)
{
    for (auto b : st.neighborhoodIndices(p))
    {
        if (f.constantOn(st.basis()[b]))
        {
            return st.basis()[b];
        }
    }
    return std::nullopt;
}

bool
isContinuousAt(SemiTopology const& st, ValueAssignment const& f, PointId p)
{
    return continuityWitness(st, f, p).has_value();
}

bool
isContinuousAtOracle(SemiTopology const& st, ValueAssignment const& f,
                     PointId p, std::size_t basisLimit)
{
    st.checkPoint(p);
    for (auto const& o : enumerateOpens(st, basisLimit))
    {
        if (o.contains(p) && f.constantOn(o))
        {
            return true;
        }
    }
    return false;
}

ContinuityReport
continuityReport(SemiTopology const& st, ValueAssignment const& f)
{
    ContinuityReport r{st.emptySet(), st.emptySet(), {}};
    r.witness.resize(st.size());
    for (auto p : st.universe().members())
    {
        r.witness[p.index] = continuityWitness(st, f, p);
        if (r.witness[p.index])
        {
            r.continuous.insert(p);
        }
        else
        {
            r.discontinuous.insert(p);
        }
    }
    return r;
}

Theorem1Verdict
checkTheorem1(SemiTopology const& st, ValueAssignment const& f)
{
    auto report = continuityReport(st, f);

    for (auto const& [p, q] : intertwinedGraph(st))
    {
        if (report.continuous.contains(p) && report.continuous.contains(q) &&
            f[p] != f[q])
        {
            return {false, 1, std::make_pair(p, q)};
        }
    }

    if (report.everywhereContinuous())
    {
        for (auto const& cls : components(st).classes)
        {
            auto members = cls.members();
            for (auto q : members)
            {
                if (f[q] != f[members.front()])
                {
                    return {false, 2, std::make_pair(members.front(), q)};
                }
            }
        }
    }
    return {};
}
}
