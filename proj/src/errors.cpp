// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#include "semitopo/errors.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace semitopo
{

BasisOutOfUniverse::BasisOutOfUniverse(std::string point)
    : Error(fmt::format("basis element mentions unknown point '{}'", point))
    , mPoint(std::move(point))
{
}

CoverageViolation::CoverageViolation(std::vector<std::string> uncovered)
    : Error(fmt::format("points not covered by any basis element: {}",
                        fmt::join(uncovered, ",")))
    , mUncovered(std::move(uncovered))
{
}

PointOutOfUniverse::PointOutOfUniverse(std::string point)
    : Error(fmt::format("point '{}' is not in the universe", point))
    , mPoint(std::move(point))
{
}

OracleLimitExceeded::OracleLimitExceeded(std::size_t basisSize, std::size_t limit)
    : Error(fmt::format("basis has {} elements, oracle limit is {}", basisSize,
                        limit))
{
}

TotalityError::TotalityError(std::vector<std::string> missing)
    : Error(fmt::format("assignment has no value for: {}",
                        fmt::join(missing, ",")))
    , mMissing(std::move(missing))
{
}

SyntaxError::SyntaxError(std::string const& what, std::size_t line,
                         std::size_t column)
    : Error(fmt::format("{}:{}: {}", line, column, what))
    , line(line)
    , column(column)
{
}

SchemaError::SchemaError(std::string const& what, std::string path)
    : Error(fmt::format("{}: {}", path.empty() ? "/" : path, what))
    , path(std::move(path))
{
}

ValueError::ValueError(std::string const& token, std::string path)
    : SchemaError(fmt::format("value '{}' is not T or F", token), std::move(path))
{
}
}
