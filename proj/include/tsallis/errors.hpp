#pragma once

#include <stdexcept>
#include <string>

namespace tsallis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unsupported or malformed image file.
class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Entropic index outside the admissible range.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A threshold candidate induces a class with zero probability mass.
class InvalidPartition : public Error {
public:
    using Error::Error;
};

/// The distribution has fewer occupied levels than requested classes.
class InfeasiblePartition : public Error {
public:
    using Error::Error;
};

/// Malformed argument or violated precondition (bad config, bad threshold list).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace tsallis
