// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace semitopo::io
{

using nlohmann::json;

namespace
{

////////////////////////////////////////////////////////////////////////////////
// Reading
////////////////////////////////////////////////////////////////////////////////

json
parseJson(std::string_view text)
{
    try
    {
        return json::parse(text.begin(), text.end());
    }
    catch (json::parse_error const& e)
    {
        // e.byte is the 1-based offset of the offending character.
        std::size_t line = 1;
        std::size_t column = 1;
        auto const end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1,
                                               text.size());
        for (std::size_t i = 0; i < end; ++i)
        {
            if (text[i] == '\n')
            {
                ++line;
                column = 1;
            }
            else
            {
                ++column;
            }
        }
        std::string what = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
        if (auto pos = what.find("] "); pos != std::string::npos)
        {
            what = what.substr(pos + 2);
        }
        throw SyntaxError(what, line, column);
    }
}

std::string
child(std::string const& path, std::string const& key)
{
    // JSON pointer escaping: '~' -> "~0", '/' -> "~1".
    std::string escaped;
    for (char c : key)
    {
        if (c == '~')
        {
            escaped += "~0";
        }
        else if (c == '/')
        {
            escaped += "~1";
        }
        else
        {
            escaped += c;
        }
    }
    return path + "/" + escaped;
}

std::string
child(std::string const& path, std::size_t index)
{
    return path + "/" + std::to_string(index);
}

json const&
field(json const& obj, std::string const& path, std::string const& key)
{
    auto it = obj.find(key);
    if (it == obj.end())
    {
        throw SchemaError("missing field '" + key + "'", path);
    }
    return *it;
}

void
expectObject(json const& j, std::string const& path)
{
    if (!j.is_object())
    {
        throw SchemaError("expected an object", path);
    }
}

void
expectArray(json const& j, std::string const& path)
{
    if (!j.is_array())
    {
        throw SchemaError("expected an array", path);
    }
}

std::string
readString(json const& j, std::string const& path)
{
    if (!j.is_string())
    {
        throw SchemaError("expected a string", path);
    }
    return j.get<std::string>();
}

Value
readValue(json const& j, std::string const& path)
{
    auto token = readString(j, path);
    auto v = parseValue(token);
    if (!v)
    {
        throw ValueError(token, path);
    }
    return *v;
}

std::vector<std::string>
readStrings(json const& j, std::string const& path)
{
    expectArray(j, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
    {
        out.push_back(readString(j[i], child(path, i)));
    }
    return out;
}

std::vector<std::string>
canonicalSet(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

json
readEnvelope(std::string_view text, std::string const& kind)
{
    auto doc = parseJson(text);
    expectObject(doc, "");
    auto actual = readString(field(doc, "", "kind"), "/kind");
    if (actual != kind)
    {
        throw SchemaError("expected kind '" + kind + "', got '" + actual + "'",
                          "/kind");
    }
    auto const& version = field(doc, "", "version");
    if (!version.is_number_integer() || version.get<long long>() != kVersion)
    {
        throw SchemaError("unsupported version " + version.dump() +
                              " (expected " + std::to_string(kVersion) + ")",
                          "/version");
    }
    return doc;
}

RawEvent
readEvent(json const& j, std::string const& path)
{
    expectObject(j, path);
    return RawEvent{
        canonicalSet(readStrings(field(j, path, "coalition"),
                                 child(path, "coalition"))),
        readValue(field(j, path, "value"), child(path, "value"))};
}

std::vector<RawEvent>
readEvents(json const& doc)
{
    auto const& events = field(doc, "", "events");
    expectArray(events, "/events");
    std::vector<RawEvent> out;
    for (std::size_t i = 0; i < events.size(); ++i)
    {
        out.push_back(readEvent(events[i], child("/events", i)));
    }
    return out;
}

std::optional<RejectReason>
parseReason(std::string const& s)
{
    if (s == "IllegalCommit")
    {
        return RejectReason::IllegalCommit;
    }
    if (s == "NotOpen")
    {
        return RejectReason::NotOpen;
    }
    return std::nullopt;
}

////////////////////////////////////////////////////////////////////////////////
// Writing
////////////////////////////////////////////////////////////////////////////////
//
// Canonical layout: two-space indentation, one basis row / event / map entry
// per line, short arrays inline, trailing newline. Strings are escaped by the
// JSON library so the output is always valid JSON.

std::string
quote(std::string const& s)
{
    return json(s).dump();
}

std::string
inlineList(std::vector<std::string> const& items)
{
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i)
    {
        if (i)
        {
            out += ", ";
        }
        out += quote(items[i]);
    }
    return out + "]";
}

// Writes `"key": [` rows `]` with each row on its own line.
void
block(std::ostringstream& out, std::string const& key,
      std::vector<std::string> const& rows, char open, char close, bool last)
{
    out << "  " << quote(key) << ": " << open;
    if (!rows.empty())
    {
        out << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            out << "    " << rows[i] << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        out << "  ";
    }
    out << close << (last ? "\n" : ",\n");
}

void
header(std::ostringstream& out, std::string const& kind)
{
    out << "{\n  \"kind\": " << quote(kind) << ",\n  \"version\": " << kVersion
        << ",\n";
}

std::string
eventRow(RawEvent const& ev)
{
    return "{\"coalition\": " + inlineList(ev.coalition) +
           ", \"value\": " + quote(std::string(tokenOf(ev.value))) + "}";
}

std::vector<std::string>
eventRows(std::vector<RawEvent> const& events)
{
    std::vector<std::string> rows;
    for (auto const& ev : events)
    {
        rows.push_back(eventRow(ev));
    }
    return rows;
}
}

SemiTopology
parseSemitopology(std::string_view text)
{
    auto doc = readEnvelope(text, "semitopology");
    auto points = readStrings(field(doc, "", "points"), "/points");
    auto const& basis = field(doc, "", "basis");
    expectArray(basis, "/basis");
    std::vector<SemiTopology::Row> rows;
    for (std::size_t i = 0; i < basis.size(); ++i)
    {
        rows.push_back(readStrings(basis[i], child("/basis", i)));
    }
    return SemiTopology(std::move(points), rows);
}

std::string
serializeSemitopology(SemiTopology const& st)
{
    std::ostringstream out;
    header(out, "semitopology");
    out << "  \"points\": " << inlineList(st.names()) << ",\n";
    std::vector<std::string> rows;
    for (auto const& b : st.basis())
    {
        rows.push_back(inlineList(st.render(b)));
    }
    block(out, "basis", rows, '[', ']', true);
    out << "}\n";
    return out.str();
}

Assignment
parseAssignment(std::string_view text)
{
    auto doc = readEnvelope(text, "assignment");
    auto const& map = field(doc, "", "map");
    expectObject(map, "/map");
    Assignment out;
    for (auto const& [key, value] : map.items())
    {
        out.emplace(key, readValue(value, child("/map", key)));
    }
    return out;
}

std::string
serializeAssignment(Assignment const& a)
{
    std::ostringstream out;
    header(out, "assignment");
    std::vector<std::string> rows;
    for (auto const& [name, v] : a)
    {
        rows.push_back(quote(name) + ": " + quote(std::string(tokenOf(v))));
    }
    block(out, "map", rows, '{', '}', true);
    out << "}\n";
    return out.str();
}

Assignment
toAssignment(SemiTopology const& st, ValueAssignment const& f)
{
    Assignment out;
    for (auto p : st.universe().members())
    {
        out.emplace(st.name(p), f[p]);
    }
    return out;
}

ValueAssignment
bindAssignment(SemiTopology const& st, Assignment const& a)
{
    return ValueAssignment::fromMap(st, a);
}

std::vector<RawEvent>
parseSchedule(std::string_view text)
{
    return readEvents(readEnvelope(text, "schedule"));
}

std::string
serializeSchedule(std::vector<RawEvent> const& events)
{
    std::ostringstream out;
    header(out, "schedule");
    block(out, "events", eventRows(events), '[', ']', true);
    out << "}\n";
    return out.str();
}

RawEvent
toRawEvent(SemiTopology const& st, ScheduleEvent const& ev)
{
    return RawEvent{st.render(ev.coalition), ev.value};
}

std::vector<ScheduleEvent>
bindSchedule(SemiTopology const& st, std::vector<RawEvent> const& events)
{
    std::vector<ScheduleEvent> out;
    for (auto const& ev : events)
    {
        out.push_back(ScheduleEvent{st.makeSet(ev.coalition), ev.value});
    }
    return out;
}

Trace
parseTrace(std::string_view text)
{
    auto doc = readEnvelope(text, "trace");
    Trace t;
    t.events = readEvents(doc);

    auto const& status = field(doc, "", "status");
    expectObject(status, "/status");
    for (auto const& [key, value] : status.items())
    {
        if (value.is_null())
        {
            t.status.emplace(key, std::nullopt);
        }
        else
        {
            t.status.emplace(key, readValue(value, child("/status", key)));
        }
    }

    t.deadlocked = canonicalSet(
        readStrings(field(doc, "", "deadlocked"), "/deadlocked"));

    auto const& forks = field(doc, "", "forks");
    expectArray(forks, "/forks");
    for (std::size_t i = 0; i < forks.size(); ++i)
    {
        auto pair = readStrings(forks[i], child("/forks", i));
        if (pair.size() != 2)
        {
            throw SchemaError("expected a pair of points", child("/forks", i));
        }
        t.forks.emplace_back(pair[0], pair[1]);
    }

    auto const& rejected = field(doc, "", "rejected");
    expectArray(rejected, "/rejected");
    for (std::size_t i = 0; i < rejected.size(); ++i)
    {
        auto path = child("/rejected", i);
        auto const& r = rejected[i];
        expectObject(r, path);
        RawRejection rr;
        auto const& index = field(r, path, "index");
        if (!index.is_number_unsigned())
        {
            throw SchemaError("expected a non-negative integer",
                              child(path, "index"));
        }
        rr.index = index.get<std::size_t>();
        rr.event = readEvent(r, path);
        auto reason = readString(field(r, path, "reason"), child(path, "reason"));
        auto parsed = parseReason(reason);
        if (!parsed)
        {
            throw SchemaError("unknown rejection reason '" + reason + "'",
                              child(path, "reason"));
        }
        rr.reason = *parsed;
        rr.blocking = canonicalSet(
            readStrings(field(r, path, "blocking"), child(path, "blocking")));
        t.rejected.push_back(std::move(rr));
    }
    return t;
}

std::string
serializeTrace(Trace const& t)
{
    std::ostringstream out;
    header(out, "trace");
    block(out, "events", eventRows(t.events), '[', ']', false);

    std::vector<std::string> status;
    for (auto const& [name, d] : t.status)
    {
        status.push_back(quote(name) + ": " +
                         (d ? quote(std::string(tokenOf(*d))) : "null"));
    }
    block(out, "status", status, '{', '}', false);

    out << "  \"deadlocked\": " << inlineList(t.deadlocked) << ",\n";

    std::vector<std::string> forks;
    for (auto const& [a, b] : t.forks)
    {
        forks.push_back(inlineList({a, b}));
    }
    block(out, "forks", forks, '[', ']', false);

    std::vector<std::string> rejected;
    for (auto const& r : t.rejected)
    {
        rejected.push_back(
            "{\"index\": " + std::to_string(r.index) +
            ", \"coalition\": " + inlineList(r.event.coalition) +
            ", \"value\": " + quote(std::string(tokenOf(r.event.value))) +
            ", \"reason\": " + quote(std::string(tokenOf(r.reason))) +
            ", \"blocking\": " + inlineList(r.blocking) + "}");
    }
    block(out, "rejected", rejected, '[', ']', true);
    out << "}\n";
    return out.str();
}

Trace
toTrace(SemiTopology const& st, SimOutcome const& outcome)
{
    Trace t;
    for (auto const& ev : outcome.final.trace())
    {
        t.events.push_back(toRawEvent(st, ev));
    }
    for (auto p : st.universe().members())
    {
        t.status.emplace(st.name(p), outcome.final.status(p));
    }
    t.deadlocked = st.render(outcome.deadlocked);
    for (auto const& [p, q] : outcome.forks)
    {
        t.forks.emplace_back(st.name(p), st.name(q));
    }
    for (auto const& r : outcome.rejected)
    {
        t.rejected.push_back(RawRejection{r.index, toRawEvent(st, r.event),
                                          r.rejection.reason,
                                          st.render(r.rejection.blocking)});
    }
    return t;
}

std::string_view
tokenOf(RejectReason r)
{
    return r == RejectReason::IllegalCommit ? "IllegalCommit" : "NotOpen";
}

std::string
readFile(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw Error("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void
writeFile(std::string const& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << contents;
    if (!out)
    {
        throw Error("failed writing '" + path + "'");
    }
}
}
