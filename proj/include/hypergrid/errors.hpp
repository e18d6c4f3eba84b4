#pragma once

#include <stdexcept>
#include <string>

namespace hypergrid {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

// malformed text, digit out of range or non-canonical digit string
class InvalidCoordinate : public Error {
public:
    using Error::Error;
};

class InvalidDigit : public InvalidCoordinate {
public:
    using InvalidCoordinate::InvalidCoordinate;
};

class Underflow : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

}  // namespace hypergrid
