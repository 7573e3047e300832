#pragma once

#include <stdexcept>
#include <string>

namespace monosub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A family description violates a standing assumption, e.g. (1,0) is missing.
class InvalidFamily : public Error {
public:
    using Error::Error;
};

/// A generator set is empty or contains something outside the family.
class InvalidGenerators : public Error {
public:
    using Error::Error;
};

/// No element of the family has slope strictly above the requested bound.
class NoSuchElement : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle refuses targets it cannot enumerate quickly.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// The reachability grid for a membership query would not fit in memory.
class SearchSpaceTooLarge : public Error {
public:
    using Error::Error;
};

/// Witness construction requested for a family that does not satisfy the hypotheses.
class TheoremNotApplicable : public Error {
public:
    using Error::Error;
};

/// A certificate file carries a version tag this build does not understand.
class UnsupportedVersion : public Error {
public:
    using Error::Error;
};

}  // namespace monosub
