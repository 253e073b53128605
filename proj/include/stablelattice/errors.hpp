#pragma once

#include <stdexcept>
#include <string>

namespace stablelattice {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text: instance files, error files, weight files.
struct ParseError : Error {
    using Error::Error;
};

// Valid syntax, invalid semantics: violated preconditions, unstable matchings,
// non-sublattices, bound-exceeded enumerations, invalid oracle partitions.
struct DomainError : Error {
    using Error::Error;
};

// Filesystem-level failures (CLI only; the library itself works on strings).
struct IoError : Error {
    using Error::Error;
};

}  // namespace stablelattice
