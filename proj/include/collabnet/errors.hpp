#pragma once

#include <stdexcept>
#include <string>

namespace collabnet {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad rows, duplicate record ids,
// alias cycles, unknown nodes, unreadable files.
struct DataError : Error {
    using Error::Error;
};

// A measure that is mathematically undefined for the given graph
// (too few nodes, no reachable pair, no node of degree >= 2).
// Distinct from DataError: the input is fine, the quantity does not exist.
struct UndefinedResultError : Error {
    using Error::Error;
};

}  // namespace collabnet
