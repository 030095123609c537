// Copyright 2026 semitopo contributors. Licensed
// under the Apache License, Version 2.0. See the LICENSE file at the root
// of this distribution or at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace semitopo
{

// Root of every error this library throws. Callers that only care about
// "something about the input was wrong" catch this.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class InvalidPointId : public Error
{
  public:
    using Error::Error;
};

class BasisOutOfUniverse : public Error
{
  public:
    BasisOutOfUniverse(std::string point);
    std::string const&
    point() const
    {
        return mPoint;
    }

  private:
    std::string mPoint;
};

class CoverageViolation : public Error
{
  public:
    CoverageViolation(std::vector<std::string> uncovered);
    std::vector<std::string> const&
    uncovered() const
    {
        return mUncovered;
    }

  private:
    std::vector<std::string> mUncovered;
};

class PointOutOfUniverse : public Error
{
  public:
    PointOutOfUniverse(std::string point);
    std::string const&
    point() const
    {
        return mPoint;
    }

  private:
    std::string mPoint;
};

class OracleLimitExceeded : public Error
{
  public:
    OracleLimitExceeded(std::size_t basisSize, std::size_t limit);
};

class UniverseOverlap : public Error
{
  public:
    using Error::Error;
};

class BridgePointCollision : public Error
{
  public:
    using Error::Error;
};

// A value assignment does not cover every point of the semitopology it is
// applied to.
class TotalityError : public Error
{
  public:
    TotalityError(std::vector<std::string> missing);
    std::vector<std::string> const&
    missing() const
    {
        return mMissing;
    }

  private:
    std::vector<std::string> mMissing;
};

// Document errors. SyntaxError carries a 1-based line/column; the others
// carry a JSON pointer into the document.
class SyntaxError : public Error
{
  public:
    SyntaxError(std::string const& what, std::size_t line, std::size_t column);
    std::size_t line;
    std::size_t column;
};

class SchemaError : public Error
{
  public:
    SchemaError(std::string const& what, std::string path);
    std::string path;
};

class ValueError : public SchemaError
{
  public:
    ValueError(std::string const& token, std::string path);
};
}
