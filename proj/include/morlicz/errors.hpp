#pragma once

#include <stdexcept>
#include <string>

namespace morlicz {

/// Evaluation outside the numerically reliable range of a function.
class RangeError : public std::runtime_error {
public:
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

/// A root/bracket could not be established for an inverse query.
class UnbracketableError : public RangeError {
public:
    explicit UnbracketableError(const std::string& what) : RangeError(what) {}
};

/// The conjugate supremum grows past the search cap.
class UnboundedConjugateError : public std::runtime_error {
public:
    explicit UnboundedConjugateError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid construction parameters (ordering violations, bad exponents, ...).
class ConstructionError : public std::invalid_argument {
public:
    explicit ConstructionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Objective is +inf on every sampled point.
class PropernessError : public std::runtime_error {
public:
    explicit PropernessError(const std::string& what) : std::runtime_error(what) {}
};

/// Text descriptor / CSV parse failure.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace morlicz
