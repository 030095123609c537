// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "semitopo/core.hpp"
#include "semitopo/relations.hpp"
#include "semitopo/valuation.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace semitopo
{

// A coalition announcing one value, atomically.
struct ScheduleEvent
{
    PointSet coalition;
    Value value;

    bool operator==(ScheduleEvent const&) const = default;
};

// nullopt means Undecided.
using Decision = std::optional<Value>;

// Per-point decision status plus the trace of accepted events. A committed
// point never changes its value.
class SimState
{
  public:
    explicit SimState(SemiTopology const& st);
    SimState(std::vector<Decision> status, std::vector<ScheduleEvent> trace);

    Decision
    status(PointId p) const
    {
        return mStatus.at(p.index);
    }
    std::vector<Decision> const&
    statuses() const
    {
        return mStatus;
    }
    std::vector<ScheduleEvent> const&
    trace() const
    {
        return mTrace;
    }

    bool allDecided() const;
    PointSet undecided() const;

    // Overwrites p's status without any legality check. Only for building
    // rule-breaking states to exercise detectFork.
    void forge(PointId p, Decision d);

    bool operator==(SimState const&) const = default;

  private:
    std::vector<Decision> mStatus;
    std::vector<ScheduleEvent> mTrace;
};

enum class RejectReason
{
    // Some member already committed to the other value.
    IllegalCommit,
    // The coalition is not open, or is empty.
    NotOpen,
};

struct Rejection
{
    RejectReason reason;
    // Members committed to the other value (IllegalCommit only).
    PointSet blocking;
};

// Accepted iff the coalition is open and nonempty and no member is committed
// to the other value. On acceptance every member becomes committed to the
// event's value and the event is appended to the trace.
std::variant<SimState, Rejection> legalCommit(SemiTopology const& st,
                                              SimState const& s,
                                              ScheduleEvent const& ev);

// Undecided points none of whose basis neighbourhoods can legally commit
// either value.
PointSet detectDeadlock(SemiTopology const& st, SimState const& s);

// Same question quantified over every open containing the point.
PointSet detectDeadlockOracle(SemiTopology const& st, SimState const& s,
                              std::size_t basisLimit = kDefaultOracleLimit);

// Intertwined pairs p < q that are committed to different values.
std::vector<Edge> detectFork(SemiTopology const& st, SimState const& s);

struct RejectedEvent
{
    std::size_t index;
    ScheduleEvent event;
    Rejection rejection;
};

struct SimOutcome
{
    SimState final;
    PointSet deadlocked;
    std::vector<Edge> forks;
    std::vector<RejectedEvent> rejected;
    std::size_t steps = 0;
};

// Draws (basis element, value) pairs uniformly and applies the legal ones.
// Stops when every point is decided, when every undecided point is
// deadlocked, or after maxSteps draws. Deterministic per seed; see Rng in
// generators.hpp for the generator. Rejected draws are not recorded.
SimOutcome runRandom(SemiTopology const& st, std::uint64_t seed,
                     std::size_t maxSteps);

// Applies events in order. Rejections are recorded and do not stop the
// replay.
SimOutcome runSchedule(SemiTopology const& st,
                       std::vector<ScheduleEvent> const& events);
}
