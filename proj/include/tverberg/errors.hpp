#pragma once

#include <stdexcept>
#include <string>

namespace tverberg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Equal or antipodal circle points, or a query point on an arc endpoint.
struct DegenerateError : Error {
    using Error::Error;
};

// Two partitions whose class sizes disagree.
struct BadPartition : Error {
    using Error::Error;
};

struct SearchCapExceeded : Error {
    using Error::Error;
};

// A guaranteed property of the construction failed to hold; indicates an upstream
// precondition violation or an implementation bug.
struct ContractViolation : Error {
    using Error::Error;
};

struct GeneralPositionViolation : Error {
    using Error::Error;
};

struct NotConvexPosition : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line(line), column(column) {}
    int line;
    int column;
};

}  // namespace tverberg
