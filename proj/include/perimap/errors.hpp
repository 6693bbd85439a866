#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perimap {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Expression parsing failed; `pos` is a 0-based offset into the input.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p)
        : Error(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Two values built over different variable tables were combined.
struct VarMismatchError : Error {
    explicit VarMismatchError(const std::string& what) : Error(what) {}
};

// Exact division was required but left a nonzero remainder.
struct InexactDivisionError : Error {
    explicit InexactDivisionError(const std::string& what) : Error(what) {}
};

// A denominator vanished (exactly, or below the numeric threshold).
struct PoleError : Error {
    long step;  // iteration index when raised during orbit computation, else -1
    explicit PoleError(const std::string& what, long s = -1) : Error(what), step(s) {}
};

// Degenerate input: a construction that has no meaning for these parameters.
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& what) : Error(what) {}
};

// A constructed object failed its own defining identities.
struct ConstructionError : Error {
    explicit ConstructionError(const std::string& what) : Error(what) {}
};

// A resource budget (degree / size / time) was exhausted.
struct BudgetExceededError : Error {
    enum class Kind { degree, size, time };
    Kind kind;
    BudgetExceededError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

}  // namespace perimap
