#ifndef THETA_ERRORS_HPP
#define THETA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace theta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or constraint check failed.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A configured budget (order cap, coset limit) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// No parametric character table exists for the requested group.
class UnsupportedGroup : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (wrong table, non-integral dimension, ...).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace theta

#endif
