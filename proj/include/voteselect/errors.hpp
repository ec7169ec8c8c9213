#pragma once

#include <stdexcept>
#include <string>

namespace voteselect {

// Base class for all domain failures. The CLI maps these to exit code 1,
// except EnumLimitError which maps to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cell in an input file could not be parsed as the expected type.
struct ParseError : Error {
    using Error::Error;
};

// An input file is structurally unusable (empty, ragged rows, ...).
struct FormatError : Error {
    using Error::Error;
};

// An operation was invoked with arguments outside its contract.
struct ArgumentError : Error {
    using Error::Error;
};

// An instance has no differently labeled peer, so its nearest enemy
// (and hence its local set) is undefined.
struct NoEnemyError : Error {
    using Error::Error;
};

// A sequential rule ran out of electable candidates before reaching the
// requested committee size.
struct ExhaustionError : Error {
    using Error::Error;
};

// A brute-force check would enumerate more subsets than the configured
// bound allows.
struct EnumLimitError : Error {
    using Error::Error;
};

} // namespace voteselect
