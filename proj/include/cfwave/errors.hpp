#pragma once

#include <stdexcept>
#include <string>

namespace cfwave {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

class ZeroArgument : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class RecursionDefect : public Error {
public:
    using Error::Error;
};

/// Linear-system route refused: estimated condition number above the guard.
class IllConditioned : public Error {
public:
    IllConditioned(const std::string& what, double cond) : Error(what), condition(cond) {}
    double condition;
};

class CostGuard : public Error {
public:
    using Error::Error;
};

/// r dips below zero on [0,1]; carries the offending location and value.
class NotNonnegative : public Error {
public:
    NotNonnegative(const std::string& what, double y, double value)
        : Error(what), where(y), minimum(value) {}
    double where;
    double minimum;
};

class ConjugatePairingFailure : public Error {
public:
    using Error::Error;
};

class TruncationTooShallow : public Error {
public:
    using Error::Error;
};

class EigenFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cfwave
