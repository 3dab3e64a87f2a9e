#pragma once

#include <stdexcept>
#include <string>

namespace gibbslab {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument: mismatched label sets, empty inputs, out-of-range parameters.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Absolute-continuity violation: positive mass against zero reference mass.
class SupportError : public Error {
public:
    using Error::Error;
};

/// A combinatorial or dense-matrix ceiling was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Quadrature grid failed to cover the effective support of a density.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// A numerical factorization or solve failed.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace gibbslab
