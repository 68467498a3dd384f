#pragma once

#include <stdexcept>
#include <string>

namespace ntrn {

// Error categories map 1:1 onto CLI exit codes, so keep the split coarse:
// ArgumentError  = caller handed us something outside a documented domain
// ParseError     = external bytes/text violate a format contract
// CorruptionError = well-formed input whose content is internally inconsistent
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class CorruptionError : public Error {
public:
    using Error::Error;
};

}  // namespace ntrn
