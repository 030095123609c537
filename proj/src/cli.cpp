// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/cli.hpp"
#include "semitopo/generators.hpp"
#include "semitopo/io.hpp"
#include "semitopo/relations.hpp"
#include "semitopo/sim.hpp"
#include "semitopo/valuation.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include <charconv>
#include <optional>

namespace semitopo::cli
{

namespace
{

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    bool json = false;
    bool quiet = false;
    bool oracle = false;
    bool literal = false;
    std::string file;
    std::string file2;
    std::string output;
    std::string family;
    std::vector<std::string> params;
    std::string set;
    std::string p;
    std::string q;
    std::string assignment;
    std::string schedule;
    std::string bridgePoint;
    std::string prefix;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> maxSteps;
};

// Writes the report unless --quiet.
class Reporter
{
  public:
    Reporter(Options const& opts, std::ostream& out) : mOpts(opts), mOut(out)
    {
    }

    void
    text(std::string const& s)
    {
        if (!mOpts.quiet && !mOpts.json)
        {
            mOut << s;
        }
    }

    void
    json(Json const& j)
    {
        if (!mOpts.quiet && mOpts.json)
        {
            mOut << j.dump(2) << "\n";
        }
    }

    // A document is the report in both modes.
    void
    document(std::string const& doc)
    {
        if (!mOpts.quiet)
        {
            mOut << doc;
        }
    }

  private:
    Options const& mOpts;
    std::ostream& mOut;
};

std::uint64_t
parseCount(std::string const& s, char const* what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
    {
        throw UsageError(fmt::format("{} must be a non-negative integer, got '{}'",
                                     what, s));
    }
    return v;
}

std::vector<std::string>
splitCommaList(std::string const& s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size())
    {
        auto end = s.find(',', start);
        if (end == std::string::npos)
        {
            end = s.size();
        }
        if (end > start)
        {
            out.push_back(s.substr(start, end - start));
        }
        start = end + 1;
    }
    return out;
}

Json
names(SemiTopology const& st, PointSet const& s)
{
    return Json(st.render(s));
}

SemiTopology
load(std::string const& path)
{
    return io::parseSemitopology(io::readFile(path));
}

void
emitDocument(Options const& opts, Reporter& rep, std::string const& doc)
{
    if (opts.output.empty())
    {
        rep.document(doc);
    }
    else
    {
        io::writeFile(opts.output, doc);
    }
}

int
cmdGenerate(Options const& opts, Reporter& rep)
{
    auto const& ps = opts.params;
    auto need = [&](std::size_t n, char const* synopsis) {
        if (ps.size() != n)
        {
            throw UsageError(fmt::format("usage: generate {}", synopsis));
        }
    };
    auto positive = [](std::uint64_t v, char const* what) {
        if (v == 0)
        {
            throw UsageError(fmt::format("{} must be >= 1", what));
        }
        return v;
    };

    std::optional<SemiTopology> st;
    if (opts.family == "majority")
    {
        need(1, "majority N");
        st = majority(positive(parseCount(ps[0], "N"), "N"));
    }
    else if (opts.family == "zwindow")
    {
        need(1, "zwindow K");
        st = zWindow(positive(parseCount(ps[0], "K"), "K"));
    }
    else if (opts.family == "discrete")
    {
        need(1, "discrete N");
        st = discrete(positive(parseCount(ps[0], "N"), "N"));
    }
    else if (opts.family == "random")
    {
        need(3, "random N M SEED");
        st = randomSemitopology(positive(parseCount(ps[0], "N"), "N"),
                                positive(parseCount(ps[1], "M"), "M"),
                                parseCount(ps[2], "SEED"));
    }
    else
    {
        throw UsageError(fmt::format(
            "unknown family '{}' (expected majority, zwindow, discrete, random)",
            opts.family));
    }
    if (!opts.prefix.empty())
    {
        st = withPrefix(*st, opts.prefix);
    }
    emitDocument(opts, rep, io::serializeSemitopology(*st));
    return kOk;
}

int
cmdCheck(Options const& opts, Reporter& rep)
{
    auto st = load(opts.file);
    auto comps = components(st);
    auto edges = intertwinedGraph(st);
    std::optional<std::size_t> opens;
    if (st.basis().size() <= kDefaultOracleLimit)
    {
        opens = enumerateOpens(st).size();
    }

    rep.text(fmt::format("valid semitopology\n"
                         "  points:            {}\n"
                         "  basis elements:    {}\n"
                         "  opens:             {}\n"
                         "  intertwined pairs: {}\n"
                         "  components:        {}\n",
                         st.size(), st.basis().size(),
                         opens ? std::to_string(*opens) : "not enumerated",
                         edges.size(), comps.classes.size()));
    Json j;
    j["valid"] = true;
    j["points"] = st.size();
    j["basis"] = st.basis().size();
    j["opens"] = opens ? Json(*opens) : Json(nullptr);
    j["intertwined_pairs"] = edges.size();
    j["components"] = comps.classes.size();
    rep.json(j);
    return kOk;
}

int
cmdOpen(Options const& opts, Reporter& rep)
{
    auto st = load(opts.file);
    auto ids = splitCommaList(opts.set);
    auto s = st.makeSet(ids);
    bool open = isOpen(st, s);
    if (opts.oracle)
    {
        auto opens = enumerateOpens(st);
        bool oracle = std::find(opens.begin(), opens.end(), s) != opens.end();
        if (oracle != open)
        {
            throw Error(fmt::format("oracle divergence on {}: fast path says {}, "
                                    "enumeration says {}",
                                    st.format(s), open, oracle));
        }
    }
    rep.text(fmt::format("{} {}\n", st.format(s), open ? "is open" : "is not open"));
    Json j;
    j["set"] = names(st, s);
    j["open"] = open;
    rep.json(j);
    return open ? kOk : kNegative;
}

int
cmdIntertwined(Options const& opts, Reporter& rep)
{
    auto st = load(opts.file);
    auto p = st.id(opts.p);
    auto q = st.id(opts.q);
    auto w = intertwined(st, p, q);
    if (opts.oracle)
    {
        bool oracle = intertwinedOracle(st, p, q);
        if (oracle != w.intertwined())
        {
            throw Error(fmt::format("oracle divergence on ({}, {}): fast path "
                                    "says {}, enumeration says {}",
                                    opts.p, opts.q, w.intertwined(), oracle));
        }
    }

    Json j;
    j["p"] = opts.p;
    j["q"] = opts.q;
    j["intertwined"] = w.intertwined();
    if (w.intertwined())
    {
        rep.text(fmt::format("intertwined: {} and {}\n", opts.p, opts.q));
        j["witness"] = nullptr;
    }
    else
    {
        auto const& [a, b] = *w.separatingPair;
        rep.text(fmt::format("not intertwined: {} and {} are separated by {} / {}\n",
                             opts.p, opts.q, st.format(a), st.format(b)));
        j["witness"] = Json::array({names(st, a), names(st, b)});
    }
    rep.json(j);
    return w.intertwined() ? kOk : kNegative;
}

int
cmdComponents(Options const& opts, Reporter& rep)
{
    auto st = load(opts.file);
    auto comps = components(st);
    std::string text = fmt::format("{} component{}\n", comps.classes.size(),
                                   comps.classes.size() == 1 ? "" : "s");
    Json classes = Json::array();
    for (auto const& c : comps.classes)
    {
        text += "  " + st.format(c) + "\n";
        classes.push_back(names(st, c));
    }
    rep.text(text);
    rep.json(Json{{"components", classes}});
    return kOk;
}

ValueAssignment
loadAssignment(SemiTopology const& st, std::string const& path)
{
    return io::bindAssignment(st, io::parseAssignment(io::readFile(path)));
}

int
cmdContinuity(Options const& opts, Reporter& rep)
{
    auto st = load(opts.file);
    auto f = loadAssignment(st, opts.assignment);
    auto r = continuityReport(st, f);

    std::string text =
        fmt::format("continuous at {}\ndiscontinuous at {}\n",
                    st.format(r.continuous), st.format(r.discontinuous));
    Json witnesses = Json::object();
    for (auto p : r.continuous.members())
    {
        text += fmt::format("  {}: constant on {}\n", st.name(p),
                            st.format(*r.witness[p.index]));
        witnesses[st.name(p)] = names(st, *r.witness[p.index]);
    }
    rep.text(text);
    Json j;
    j["continuous"] = names(st, r.continuous);
    j["discontinuous"] = names(st, r.discontinuous);
    j["witness"] = witnesses;
    rep.json(j);
    return r.everywhereContinuous() ? kOk : kNegative;
}

int
cmdTheorem1(Options const& opts, Reporter& rep)
{
    auto st = load(opts.file);
    auto f = loadAssignment(st, opts.assignment);
    auto v = checkTheorem1(st, f);
    Json j;
    j["verdict"] = v.pass ? "PASS" : "FAIL";
    if (v.pass)
    {
        rep.text("PASS\n");
        j["counterexample"] = nullptr;
    }
    else
    {
        auto [p, q] = *v.counterexample;
        rep.text(fmt::format("FAIL (part {}): {}={} but {}={}\n", v.failedPart,
                             st.name(p), tokenOf(f[p]), st.name(q),
                             tokenOf(f[q])));
        j["part"] = v.failedPart;
        j["counterexample"] = Json::array({st.name(p), st.name(q)});
    }
    rep.json(j);
    return v.pass ? kOk : kNegative;
}

int
cmdSimulate(Options const& opts, Reporter& rep)
{
    auto st = load(opts.file);
    bool scheduled = !opts.schedule.empty();
    bool random = opts.seed.has_value() || opts.maxSteps.has_value();
    if (scheduled == random || (random && !(opts.seed && opts.maxSteps)))
    {
        throw UsageError(
            "simulate needs either --schedule FILE or --seed N --max-steps M");
    }

    SimOutcome outcome =
        scheduled ? runSchedule(st, io::bindSchedule(st, io::parseSchedule(
                                                             io::readFile(opts.schedule))))
                  : runRandom(st, *opts.seed, *opts.maxSteps);
    auto trace = io::toTrace(st, outcome);

    if (!opts.output.empty())
    {
        io::writeFile(opts.output, io::serializeTrace(trace));
    }
    if (opts.json)
    {
        rep.document(io::serializeTrace(trace));
    }
    else
    {
        std::string text =
            fmt::format("applied {} event{}, rejected {}\n", outcome.final.trace().size(),
                        outcome.final.trace().size() == 1 ? "" : "s",
                        outcome.rejected.size());
        for (auto const& r : outcome.rejected)
        {
            text += fmt::format("  event #{} {}={}: {}", r.index,
                                st.format(r.event.coalition), tokenOf(r.event.value),
                                io::tokenOf(r.rejection.reason));
            if (!r.rejection.blocking.empty())
            {
                text += " (blocked by " + st.format(r.rejection.blocking) + ")";
            }
            text += "\n";
        }
        std::vector<std::string> status;
        for (auto p : st.universe().members())
        {
            auto d = outcome.final.status(p);
            status.push_back(st.name(p) + "=" + (d ? std::string(tokenOf(*d)) : "?"));
        }
        text += fmt::format("status: {}\n", fmt::join(status, " "));
        text += fmt::format("deadlocked: {}\n", st.format(outcome.deadlocked));
        std::vector<std::string> forks;
        for (auto const& [p, q] : outcome.forks)
        {
            forks.push_back(fmt::format("({},{})", st.name(p), st.name(q)));
        }
        text += fmt::format("forks: {}\n", forks.empty() ? "none"
                                                         : fmt::format("{}", fmt::join(forks, " ")));
        rep.text(text);
    }
    bool clean = outcome.deadlocked.empty() && outcome.forks.empty();
    return clean ? kOk : kNegative;
}

int
cmdBridge(Options const& opts, Reporter& rep)
{
    auto e = load(opts.file);
    auto t = load(opts.file2);
    auto b = bridge(e, t, opts.bridgePoint,
                    opts.literal ? BridgeConvention::LiteralSetBuilder
                                 : BridgeConvention::NonemptySides);
    emitDocument(opts, rep, io::serializeSemitopology(b));
    return kOk;
}
}

int
run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    Options opts;
    CLI::App app{"Semitopology analysis and agreement simulation", "semitopo"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opts.json, "Machine-readable report");
    app.add_flag("--quiet", opts.quiet, "Report through the exit code only");

    auto* gen = app.add_subcommand(
        "generate", "Emit a named semitopology: majority N | zwindow K | "
                    "discrete N | random N M SEED");
    gen->add_option("family", opts.family, "Family name")->required();
    gen->add_option("params", opts.params, "Family parameters");
    gen->add_option("--prefix", opts.prefix, "Prepend PREFIX to every point name");
    gen->add_option("-o,--output", opts.output, "Write to FILE instead of stdout");

    auto* check = app.add_subcommand("check", "Validate a semitopology and print statistics");
    check->add_option("file", opts.file)->required();

    auto* open = app.add_subcommand("open", "Is a set of points open?");
    open->add_option("file", opts.file)->required();
    open->add_option("--set", opts.set, "Comma-separated points")->required();
    open->add_flag("--oracle", opts.oracle, "Cross-check against full enumeration");

    auto* inter = app.add_subcommand("intertwined", "Are two points intertwined?");
    inter->add_option("file", opts.file)->required();
    inter->add_option("p", opts.p)->required();
    inter->add_option("q", opts.q)->required();
    inter->add_flag("--oracle", opts.oracle, "Cross-check against full enumeration");

    auto* comps = app.add_subcommand("components", "Transitively-intertwined components");
    comps->add_option("file", opts.file)->required();

    auto* cont = app.add_subcommand("continuity", "Where is an assignment continuous?");
    cont->add_option("file", opts.file)->required();
    cont->add_option("--assignment", opts.assignment, "Assignment document")->required();

    auto* thm = app.add_subcommand("theorem1", "Self-check agreement of continuous points");
    thm->add_option("file", opts.file)->required();
    thm->add_option("--assignment", opts.assignment, "Assignment document")->required();

    auto* sim = app.add_subcommand("simulate", "Replay a schedule or run the random scheduler");
    sim->add_option("file", opts.file)->required();
    sim->add_option("--schedule", opts.schedule, "Schedule document");
    sim->add_option("--seed", opts.seed, "Random scheduler seed");
    sim->add_option("--max-steps", opts.maxSteps, "Random scheduler step budget");
    sim->add_option("-o,--output", opts.output, "Also write the trace document to FILE");

    auto* br = app.add_subcommand("bridge", "Join two semitopologies through a bridging point");
    br->add_option("e", opts.file)->required();
    br->add_option("t", opts.file2)->required();
    br->add_option("--bridge-point", opts.bridgePoint, "Name of the bridging point")->required();
    br->add_flag("--literal", opts.literal,
                 "Also allow bridge coalitions with an empty side");
    br->add_option("-o,--output", opts.output, "Write to FILE instead of stdout");

    std::vector<char const*> argv{"semitopo"};
    for (auto const& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return kOk;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << "\n" << app.help();
        return kError;
    }

    Reporter rep(opts, out);
    try
    {
        if (*gen)
            return cmdGenerate(opts, rep);
        if (*check)
            return cmdCheck(opts, rep);
        if (*open)
            return cmdOpen(opts, rep);
        if (*inter)
            return cmdIntertwined(opts, rep);
        if (*comps)
            return cmdComponents(opts, rep);
        if (*cont)
            return cmdContinuity(opts, rep);
        if (*thm)
            return cmdTheorem1(opts, rep);
        if (*sim)
            return cmdSimulate(opts, rep);
        if (*br)
            return cmdBridge(opts, rep);
    }
    catch (UsageError const& e)
    {
        err << "error: " << e.what() << "\n" << app.help();
        return kError;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
}
