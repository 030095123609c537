// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "semitopo/core.hpp"
#include "semitopo/sim.hpp"
#include "semitopo/valuation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semitopo::io
{

// Every document is a JSON object with an envelope
//   {"kind": <semitopology|assignment|schedule|trace>, "version": 1, ...}
// Parsing validates syntax, then the schema of the kind; anything that needs
// a semitopology (unknown points, totality) is checked when the document is
// bound to one.

constexpr int kVersion = 1;

using Assignment = std::map<std::string, Value>;

struct RawEvent
{
    // Sorted, without duplicates.
    std::vector<std::string> coalition;
    Value value;

    bool operator==(RawEvent const&) const = default;
};

struct RawRejection
{
    std::size_t index = 0;
    RawEvent event;
    RejectReason reason = RejectReason::NotOpen;
    std::vector<std::string> blocking;

    bool operator==(RawRejection const&) const = default;
};

// A simulation outcome in identifier space.
struct Trace
{
    std::vector<RawEvent> events;
    std::map<std::string, std::optional<Value>> status;
    std::vector<std::string> deadlocked;
    std::vector<std::pair<std::string, std::string>> forks;
    std::vector<RawRejection> rejected;

    bool operator==(Trace const&) const = default;
};

SemiTopology parseSemitopology(std::string_view text);
std::string serializeSemitopology(SemiTopology const& st);

Assignment parseAssignment(std::string_view text);
std::string serializeAssignment(Assignment const& a);
Assignment toAssignment(SemiTopology const& st, ValueAssignment const& f);
// TotalityError / PointOutOfUniverse.
ValueAssignment bindAssignment(SemiTopology const& st, Assignment const& a);

std::vector<RawEvent> parseSchedule(std::string_view text);
std::string serializeSchedule(std::vector<RawEvent> const& events);
RawEvent toRawEvent(SemiTopology const& st, ScheduleEvent const& ev);
// PointOutOfUniverse.
std::vector<ScheduleEvent> bindSchedule(SemiTopology const& st,
                                        std::vector<RawEvent> const& events);

Trace parseTrace(std::string_view text);
std::string serializeTrace(Trace const& t);
Trace toTrace(SemiTopology const& st, SimOutcome const& outcome);

std::string_view tokenOf(RejectReason r);

// Reads a whole file; throws semitopo::Error on failure.
std::string readFile(std::string const& path);
void writeFile(std::string const& path, std::string_view contents);
}
