#ifndef SPLITPERM_ERROR_HPP
#define SPLITPERM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace splitperm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (permutation, matching, spec).
class ParseError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A user-supplied colorer returned a certificate that does not validate.
class InvalidColorerError : public Error {
public:
    using Error::Error;
};

// A witness construction failed its own runtime verification.
class ConstructionError : public Error {
public:
    using Error::Error;
};

// A guarantee that should hold by construction was violated; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

}  // namespace detail
}  // namespace splitperm

#endif
