#pragma once

#include <stdexcept>
#include <string>

namespace permuta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotLatinSquare : Error {
    using Error::Error;
};
struct NotAssociative : Error {
    using Error::Error;
};
struct NoIdentity : Error {
    using Error::Error;
};
struct OrderExceedsCap : Error {
    using Error::Error;
};
struct InvalidParameters : Error {
    using Error::Error;
};
struct NoProperSubgroups : Error {
    using Error::Error;
};
struct LatticeTooLarge : Error {
    using Error::Error;
};
struct DegreeNotThree : Error {
    using Error::Error;
};
struct ParamsOutOfRange : Error {
    using Error::Error;
};
struct HashMismatch : Error {
    using Error::Error;
};
struct UnknownTarget : Error {
    using Error::Error;
};
struct UnsupportedFormat : Error {
    using Error::Error;
};
struct UnrecognizedDescriptor : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace permuta
