#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphonlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds a documented enumeration/size cap.
struct CapacityError : Error {
    using Error::Error;
};

// Parameter outside its mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// Pattern graph larger than host graph.
struct SizeError : Error {
    using Error::Error;
};

struct EmptyClassError : Error {
    using Error::Error;
};

struct InconclusiveError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what + " (byte " + std::to_string(byte_offset) + ")"), offset(byte_offset) {}
};

}  // namespace graphonlab
