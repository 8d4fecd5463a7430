#pragma once

#include <stdexcept>
#include <string>

namespace hta {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DuplicateEntry : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class DimMismatch : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class SlotOutOfRange : public Error {
public:
    using Error::Error;
};

class UnsupportedArity : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hta
