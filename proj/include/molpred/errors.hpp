#pragma once

#include <stdexcept>
#include <string>

namespace molpred {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroMatrixError : Error {
    ZeroMatrixError() : Error("matrix is zero") {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

struct DimensionCapError : Error {
    explicit DimensionCapError(int dim, int cap)
        : Error("dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap)) {}
};

struct NotPointedError : Error {
    NotPointedError() : Error("cone has nontrivial lineality space") {}
};

struct ConeNotPointedError : Error {
    ConeNotPointedError() : Error("ordering cone is not pointed") {}
};

struct ConeNotSolidError : Error {
    ConeNotSolidError() : Error("ordering cone has empty interior") {}
};

struct UnboundedFeasibleSetError : Error {
    UnboundedFeasibleSetError() : Error("feasible set is unbounded") {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

struct NotAnMolpError : Error {
    NotAnMolpError() : Error("problem does not use the natural ordering cone") {}
};

struct EmptyObjectivesError : Error {
    EmptyObjectivesError() : Error("objective matrix is zero") {}
};

struct FactorizationMismatchError : Error {
    FactorizationMismatchError() : Error("factors do not recompose the objective matrix") {}
};

struct SkippedReductionError : Error {
    SkippedReductionError() : Error("reduction was skipped; no derived problem available") {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

}  // namespace molpred
