#pragma once

#include <stdexcept>
#include <string>

namespace hopfaz {

/// Shape or dimension disagreement between operands.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Scalars from different fields were combined.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters outside the domain of a constructor (alpha = 0, n = 0, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The input does not describe a valid structure (singular antipode,
/// integral space of the wrong dimension, non-scalar cocycle value, ...).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A linear map or convolution element that was required to be invertible is not.
class NotInvertible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hopfaz
