#pragma once

#include <stdexcept>
#include <string>

namespace tsvdkit {

// Base of everything the library throws. The C API maps each subclass onto a
// distinct status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes that do not conform (inner dimension, tube length, square slices).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Malformed tensor documents or non-finite values.
class FormatError : public Error {
public:
    using Error::Error;
};

// Input that should carry an algebraic structure but does not (non-circulant
// block matrix, spectrum without conjugate symmetry).
class StructureError : public Error {
public:
    using Error::Error;
};

// Singular slices, SVD non-convergence.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Out-of-range user arguments (truncation rank, tolerances).
class ArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace tsvdkit
