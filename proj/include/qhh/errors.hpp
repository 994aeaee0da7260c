#pragma once

#include <stdexcept>
#include <string>

namespace qhh {

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Vector or matrix sizes do not fit the operation.
struct DimensionMismatch : Error
{
    using Error::Error;
};

/// A relation is not a nonzero combination of parallel paths of length >= 2.
struct MalformedRelation : Error
{
    using Error::Error;
};

/// Some path of the claimed nilpotency length survives modulo the relations.
struct AdmissibilityError : Error
{
    using Error::Error;
};

/// The new arrows create a relative cycle, so the extended algebra is infinite-dimensional.
struct InfiniteError : Error
{
    using Error::Error;
};

struct RelativeLoopError : Error
{
    using Error::Error;
};

/// Operation requires a quiver without oriented cycles.
struct CycleError : Error
{
    using Error::Error;
};

/// Objects defined over different algebras were combined.
struct AlgebraMismatch : Error
{
    using Error::Error;
};

/// A size cap guarding the brute-force systems was exceeded.
struct ResourceError : Error
{
    using Error::Error;
};

struct ParseError : Error
{
    ParseError(int line, int column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line(line),
          column(column)
    {
    }

    int line;
    int column;
};

}  // namespace qhh
