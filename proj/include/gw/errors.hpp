#pragma once

#include <stdexcept>
#include <string>

namespace gw {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

class InvalidBase : public Error {
public:
    explicit InvalidBase(const std::string& msg = "base must be >= 2") : Error(msg) {}
};

class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& msg = "element is not invertible") : Error(msg) {}
};

class OracleLimitExceeded : public Error {
public:
    explicit OracleLimitExceeded(const std::string& msg) : Error(msg) {}
};

class LimitExceeded : public Error {
public:
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

class EmptyPolynomial : public Error {
public:
    explicit EmptyPolynomial(const std::string& msg = "polynomial has no terms") : Error(msg) {}
};

class MalformedSpec : public Error {
public:
    explicit MalformedSpec(const std::string& msg) : Error(msg) {}
};

class NotPIntegral : public Error {
public:
    explicit NotPIntegral(const std::string& msg) : Error(msg) {}
};

class BadResidueClass : public Error {
public:
    explicit BadResidueClass(const std::string& msg) : Error(msg) {}
};

class CheckpointError : public Error {
public:
    explicit CheckpointError(const std::string& msg) : Error(msg) {}
};

} // namespace gw
