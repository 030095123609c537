// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/sim.hpp"
#include "semitopo/generators.hpp"

#include <algorithm>

namespace semitopo
{

SimState::SimState(SemiTopology const& st) : mStatus(st.size())
{
}

SimState::SimState(std::vector<Decision> status, std::vector<ScheduleEvent> trace)
    : mStatus(std::move(status)), mTrace(std::move(trace))
{
}

bool
SimState::allDecided() const
{
    return std::all_of(mStatus.begin(), mStatus.end(),
                       [](Decision const& d) { return d.has_value(); });
}

PointSet
SimState::undecided() const
{
    PointSet out(mStatus.size());
    for (std::uint32_t i = 0; i < mStatus.size(); ++i)
    {
        if (!mStatus[i])
        {
            out.insert(PointId{i});
        }
    }
    return out;
}

void
SimState::forge(PointId p, Decision d)
{
    mStatus.at(p.index) = d;
}

namespace
{
// Members of coalition committed to something other than v.
PointSet
blockers(SimState const& s, PointSet const& coalition, Value v)
{
    PointSet out(coalition.universeSize());
    for (auto p : coalition.members())
    {
        auto d = s.status(p);
        if (d && *d != v)
        {
            out.insert(p);
        }
    }
    return out;
}

bool
canCommit(SimState const& s, PointSet const& coalition)
{
    return std::any_of(std::begin(kAllValues), std::end(kAllValues),
                       [&](Value v) { return blockers(s, coalition, v).empty(); });
}
}

std::variant<SimState, Rejection>
legalCommit(SemiTopology const& st, SimState const& s, ScheduleEvent const& ev)
{
    st.checkSet(ev.coalition);
    if (ev.coalition.empty() || !isOpen(st, ev.coalition))
    {
        return Rejection{RejectReason::NotOpen, st.emptySet()};
    }
    auto blocking = blockers(s, ev.coalition, ev.value);
    if (!blocking.empty())
    {
        return Rejection{RejectReason::IllegalCommit, std::move(blocking)};
    }
    auto status = s.statuses();
    for (auto p : ev.coalition.members())
    {
        status[p.index] = ev.value;
    }
    auto trace = s.trace();
    trace.push_back(ev);
    return SimState(std::move(status), std::move(trace));
}

PointSet
detectDeadlock(SemiTopology const& st, SimState const& s)
{
    PointSet out = st.emptySet();
    for (auto p : s.undecided().members())
    {
        auto const& nbhd = st.neighborhoodIndices(p);
        bool stuck = std::none_of(nbhd.begin(), nbhd.end(), [&](auto b) {
            return canCommit(s, st.basis()[b]);
        });
        if (stuck)
        {
            out.insert(p);
        }
    }
    return out;
}

PointSet
detectDeadlockOracle(SemiTopology const& st, SimState const& s,
                     std::size_t basisLimit)
{
    auto opens = enumerateOpens(st, basisLimit);
    PointSet out = st.emptySet();
    for (auto p : s.undecided().members())
    {
        bool stuck = true;
        for (auto const& o : opens)
        {
            if (!o.contains(p))
            {
                continue;
            }
            for (auto v : kAllValues)
            {
                if (std::holds_alternative<SimState>(
                        legalCommit(st, s, ScheduleEvent{o, v})))
                {
                    stuck = false;
                }
            }
        }
        if (stuck)
        {
            out.insert(p);
        }
    }
    return out;
}

std::vector<Edge>
detectFork(SemiTopology const& st, SimState const& s)
{
    std::vector<Edge> out;
    for (auto const& [p, q] : intertwinedGraph(st))
    {
        auto a = s.status(p);
        auto b = s.status(q);
        if (a && b && *a != *b)
        {
            out.emplace_back(p, q);
        }
    }
    return out;
}

namespace
{
SimOutcome
finish(SemiTopology const& st, SimState state, std::vector<RejectedEvent> rejected,
       std::size_t steps)
{
    auto deadlocked = detectDeadlock(st, state);
    auto forks = detectFork(st, state);
    return SimOutcome{std::move(state), std::move(deadlocked), std::move(forks),
                      std::move(rejected), steps};
}
}

SimOutcome
runRandom(SemiTopology const& st, std::uint64_t seed, std::size_t maxSteps)
{
    Rng rng(seed);
    SimState state(st);
    auto const& basis = st.basis();
    std::size_t steps = 0;

    // A fresh state is never deadlocked, so the deadlock test only needs to
    // run after a state change.
    while (steps < maxSteps && !state.allDecided() && !basis.empty())
    {
        // Draw k in [0, 2B): basis element k / 2, value T when k is even.
        auto k = uniformBelow(rng, 2 * basis.size());
        ++steps;
        ScheduleEvent ev{basis[k / 2], k % 2 == 0 ? Value::T : Value::F};
        auto next = legalCommit(st, state, ev);
        if (auto* accepted = std::get_if<SimState>(&next))
        {
            bool changed = accepted->statuses() != state.statuses();
            state = std::move(*accepted);
            if (changed && detectDeadlock(st, state) == state.undecided())
            {
                break;
            }
        }
    }
    return finish(st, std::move(state), {}, steps);
}

SimOutcome
runSchedule(SemiTopology const& st, std::vector<ScheduleEvent> const& events)
{
    SimState state(st);
    std::vector<RejectedEvent> rejected;
    for (std::size_t i = 0; i < events.size(); ++i)
    {
        auto next = legalCommit(st, state, events[i]);
        if (auto* r = std::get_if<Rejection>(&next))
        {
            rejected.push_back(RejectedEvent{i, events[i], std::move(*r)});
        }
        else
        {
            state = std::get<SimState>(std::move(next));
        }
    }
    return finish(st, std::move(state), std::move(rejected), events.size());
}
}
