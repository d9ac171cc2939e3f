#ifndef BOOKRAMSEY_ERROR_HPP
#define BOOKRAMSEY_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bookramsey {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InputError : public Error {
public:
    using Error::Error;
};

/// A size limit (vertex cap, enumeration cap, clause guard) would be exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Parameters are well-formed but outside what is implemented (e.g. non-prime q).
class UnsupportedParameter : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace bookramsey

#endif
