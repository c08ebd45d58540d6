// latcube/errors.hpp — exception types shared across the library.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latcube {

// Base class of every error thrown by latcube.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInput : Error {
    using Error::Error;
};

struct NotRepresentable : Error {
    using Error::Error;
};

struct InvalidDimensions : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct NotOrthogonal : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// Text-format parse failure; positions are 1-based.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;

    ParseError(const std::string& what, std::size_t line_, std::size_t column_ = 0)
        : Error(what), line(line_), column(column_) {}
};

}  // namespace latcube
