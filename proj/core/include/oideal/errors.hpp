#ifndef OIDEAL_ERRORS_HPP
#define OIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oideal {

// Base for everything the engine throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input: ring mismatches, non-homogeneous data,
// bad twists, invalid hints. Maps to CLI exit code 2.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

class RingMismatchError : public InvalidInputError {
public:
    explicit RingMismatchError(const std::string& msg) : InvalidInputError(msg) {}
};

// dim(R/I) is undefined for the unit ideal; signaled distinctly from other
// input problems so callers can branch on it.
class UnitIdealError : public InvalidInputError {
public:
    explicit UnitIdealError(const std::string& msg) : InvalidInputError(msg) {}
};

// Degree cap or pair cap exceeded. Partial state is discarded by the thrower.
// Maps to CLI exit code 3.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// A chain-map lift failed at some stage: the target is not acyclic there or
// the inducing map is ill-defined.
class LiftError : public Error {
public:
    LiftError(const std::string& msg, int stage) : Error(msg), stage(stage) {}
    int stage;
};

// Seeded randomized search (regular sequences, lambda selection) ran out of
// its retry budget.
class RetryExhaustedError : public Error {
public:
    explicit RetryExhaustedError(const std::string& msg) : Error(msg) {}
};

// Parser diagnostics carry a position.
class ParseError : public InvalidInputError {
public:
    ParseError(const std::string& msg, int line, int col)
        : InvalidInputError(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

}  // namespace oideal

#endif
