#pragma once

#include <stdexcept>
#include <string>

namespace cnb {

/// Invalid argument or violated precondition. CLI exit code 3.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (matrix files, complex literals). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard would be exceeded. CLI exit code 4.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative algorithm failed to converge. CLI exit code 5.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, long iterations_run)
        : std::runtime_error(what), iterations(iterations_run) {}

    long iterations = 0;
};

} // namespace cnb
