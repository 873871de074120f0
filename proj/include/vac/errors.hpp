#pragma once

#include <stdexcept>
#include <string>

namespace vac {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};

struct PoleAtLevel : Error {
    explicit PoleAtLevel(const std::string& where)
        : Error("denominator vanishes at the requested level: " + where) {}
};

// Position is 0-based character offset for expression strings,
// 1-based line number for definition files (see `line` flag).
struct ParseError : Error {
    long position;
    bool isLine;
    std::string expected;
    ParseError(long pos, std::string expectedWhat, bool lineBased = false)
        : Error((lineBased ? "parse error at line " : "parse error at position ") +
                std::to_string(pos) + ": expected " + expectedWhat),
          position(pos), isLine(lineBased), expected(std::move(expectedWhat)) {}
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& name)
        : Error("unknown generator: " + name) {}
};

struct UnknownBuiltin : Error {
    explicit UnknownBuiltin(const std::string& name)
        : Error("unknown builtin: " + name) {}
};

struct UnknownMap : Error {
    explicit UnknownMap(const std::string& name)
        : Error("unknown map: " + name) {}
};

struct DuplicatePair : Error {
    DuplicatePair(const std::string& a, const std::string& b)
        : Error("bracket pair declared twice: (" + a + ", " + b + ")") {}
};

struct SlotClash : Error {
    explicit SlotClash(const std::string& what)
        : Error("tensor slot clash: " + what) {}
};

struct MixedAlgebra : Error {
    explicit MixedAlgebra(const std::string& what)
        : Error("generator outside the declared algebra: " + what) {}
};

struct NotVirasoro : Error {
    std::string residual;
    explicit NotVirasoro(std::string residualRendered)
        : Error("field does not satisfy the Virasoro bracket; residual: " + residualRendered),
          residual(std::move(residualRendered)) {}
};

struct NotEigen : Error {
    explicit NotEigen(const std::string& what)
        : Error("field is not an eigenvector of the weight operator: " + what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what)
        : Error("internal invariant violated: " + what) {}
};

} // namespace vac
