#pragma once

#include <stdexcept>
#include <string>

namespace parastat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// sqrt of a negative rational was requested; signals a formula misprint or a bug upstream.
struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& what) : Error(what) {}
};

// square-free factorization hit a remainder beyond the trial-division bound.
struct FactorBoundExceeded : Error {
    explicit FactorBoundExceeded(const std::string& what) : Error(what) {}
};

// a coupling coefficient ended with an unpaired zero denominator.
struct SingularCoefficient : Error {
    explicit SingularCoefficient(const std::string& what) : Error(what) {}
};

// a reduced matrix element ended with an unpaired zero denominator.
struct SingularReducedElement : Error {
    explicit SingularReducedElement(const std::string& what) : Error(what) {}
};

// a pattern's triangular shape does not match the signature.
struct ShapeError : Error {
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// a top row violates the ordering/hook constraints.
struct TopRowError : Error {
    explicit TopRowError(const std::string& what) : Error(what) {}
};

} // namespace parastat
