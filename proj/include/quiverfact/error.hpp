#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qf {

enum class ErrorKind {
    InvalidArgument,
    UnknownVertex,
    Parse,
    CapExceeded,
    BoundExceeded,
    Singular,
    DomainError,
};

/// Base of every exception thrown by the library. The C API maps `kind()`
/// onto its status codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::Parse,
                "parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace qf
