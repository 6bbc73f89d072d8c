#pragma once

#include <stdexcept>
#include <string>

namespace nefres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (dimension mismatch, bad index, negative rank, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A requested quantity is not available from the data this library trusts.
class Unverifiable : public Error {
public:
    using Error::Error;
};

/// (variety, c1) pair outside the range covered by the shipped classification tables.
class NotClassified : public Error {
public:
    using Error::Error;
};

}  // namespace nefres
