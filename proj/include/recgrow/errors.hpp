#pragma once

#include <stdexcept>
#include <string>

namespace recgrow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters fail the growth conditions (b > 0, 4ab >= 1, d0 > 0) or a
/// module-specific precondition on them.
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Integer-only operation called with non-integer a, b or d0.
class NonIntegerParams : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

/// Requested index or size exceeds the configured resource cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Requested precision cannot be delivered within the precision budget.
class ToleranceUnachievable : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class CacheCorrupted : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (rational literal, JSON document).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace recgrow
