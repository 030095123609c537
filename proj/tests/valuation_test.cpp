// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "oracle.hpp"
#include "semitopo/generators.hpp"
#include "semitopo/relations.hpp"
#include "semitopo/valuation.hpp"

#include <doctest.h>

using namespace semitopo;

namespace
{
// T on {0,1,2}, F on {3,4,5,6}.
ValueAssignment
splitAssignment(SemiTopology const& z3)
{
    return ValueAssignment::fromMap(z3, {{"0", Value::T},
                                         {"1", Value::T},
                                         {"2", Value::T},
                                         {"3", Value::F},
                                         {"4", Value::F},
                                         {"5", Value::F},
                                         {"6", Value::F}});
}

ValueAssignment
randomAssignment(SemiTopology const& st, Rng& rng)
{
    std::vector<Value> v;
    for (std::size_t i = 0; i < st.size(); ++i)
    {
        v.push_back(uniformBelow(rng, 2) ? Value::T : Value::F);
    }
    return ValueAssignment(st, std::move(v));
}
}

TEST_CASE("value tokens")
{
    CHECK(std::string(tokenOf(Value::T)) == "T");
    CHECK(std::string(tokenOf(Value::F)) == "F");
    CHECK(parseValue("T") == Value::T);
    CHECK(parseValue("F") == Value::F);
    CHECK_FALSE(parseValue("X").has_value());
    CHECK_FALSE(parseValue("t").has_value());
}

TEST_CASE("assignments are total")
{
    auto z1 = zWindow(1);
    CHECK_THROWS_AS(ValueAssignment::fromMap(z1, {{"0", Value::T}}), TotalityError);
    CHECK_THROWS_AS(ValueAssignment::fromMap(z1, {{"0", Value::T},
                                                  {"1", Value::T},
                                                  {"2", Value::T},
                                                  {"9", Value::T}}),
                    PointOutOfUniverse);
    CHECK_THROWS_AS(ValueAssignment(z1, {Value::T}), TotalityError);
}

TEST_CASE("continuity on the split window")
{
    auto z3 = zWindow(3);
    auto f = splitAssignment(z3);

    CHECK(isContinuousAt(z3, f, z3.id("0")));
    CHECK(*continuityWitness(z3, f, z3.id("0")) == z3.makeSet({"0", "1", "2"}));
    CHECK_FALSE(isContinuousAt(z3, f, z3.id("3")));

    auto r = continuityReport(z3, f);
    CHECK(r.discontinuous == z3.makeSet({"3"}));
    CHECK(r.continuous == (z3.universe() - z3.makeSet({"3"})));

    auto v = checkTheorem1(z3, f);
    CHECK(v.pass);
}

TEST_CASE("continuity on majority(3)")
{
    auto m3 = majority(3);
    auto f = ValueAssignment::fromMap(
        m3, {{"p0", Value::T}, {"p1", Value::F}, {"p2", Value::F}});
    auto r = continuityReport(m3, f);
    CHECK(r.discontinuous == m3.makeSet({"p0"}));
    CHECK(*r.witness[m3.id("p1").index] == m3.makeSet({"p1", "p2"}));
    CHECK_FALSE(r.witness[m3.id("p0").index].has_value());
    CHECK(checkTheorem1(m3, f).pass);
}

TEST_CASE("constant assignments are continuous everywhere")
{
    for (auto const& st : {majority(4), zWindow(3), discrete(3),
                           bridge(withPrefix(majority(3), "e"), withPrefix(majority(3), "t"), "r")})
    {
        for (auto v : kAllValues)
        {
            auto f = ValueAssignment::constant(st, v);
            CHECK(continuityReport(st, f).everywhereContinuous());
            CHECK(checkTheorem1(st, f).pass);
        }
    }
}

TEST_CASE("discrete spaces are continuous for every assignment")
{
    auto d = discrete(4);
    Rng rng(5);
    for (int i = 0; i < 20; ++i)
    {
        auto f = randomAssignment(d, rng);
        CHECK(continuityReport(d, f).everywhereContinuous());
        CHECK(checkTheorem1(d, f).pass);
    }
}

TEST_CASE("continuity agrees with the all-opens definition")
{
    Rng rng(2024);
    for (std::uint64_t seed = 300; seed < 420; ++seed)
    {
        auto st = randomSemitopology(1 + seed % 6, 1 + seed % 8, seed);
        auto f = randomAssignment(st, rng);
        CAPTURE(seed);
        auto opens = oracle::opens(st);
        auto r = continuityReport(st, f);
        for (auto p : st.universe().members())
        {
            bool expected = false;
            for (auto const& o : opens)
            {
                if (!o.count(st.name(p)))
                {
                    continue;
                }
                bool constant = true;
                for (auto const& x : o)
                {
                    constant &= f[st.id(x)] == f[p];
                }
                expected |= constant;
            }
            CHECK(isContinuousAt(st, f, p) == expected);
            CHECK(isContinuousAtOracle(st, f, p) == expected);
            CHECK(r.continuous.contains(p) == expected);
            CHECK(r.discontinuous.contains(p) == !expected);
            if (auto const& w = r.witness[p.index])
            {
                CHECK(w->contains(p));
                CHECK(isOpen(st, *w));
                CHECK(f.constantOn(*w));
            }
        }
        CHECK(checkTheorem1(st, f).pass);
    }
}
