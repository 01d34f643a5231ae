#pragma once

#include <stdexcept>
#include <string>

namespace zeromode {

// Raised for numerical failures; the CLI maps these to exit status 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public NumericError {
public:
    using NumericError::NumericError;
};

class AsymmetricMatrix : public NumericError {
public:
    using NumericError::NumericError;
};

// Potential with a negative squared frequency beyond tolerance.
class InvertedOscillator : public NumericError {
public:
    using NumericError::NumericError;
};

class SingularBlock : public NumericError {
public:
    using NumericError::NumericError;
};

// 2 omega1^2 > omega0^2 in the coupled pair.
class ImaginaryMode : public NumericError {
public:
    using NumericError::NumericError;
};

class DegenerateMomentum : public NumericError {
public:
    using NumericError::NumericError;
};

class DegenerateCoupling : public NumericError {
public:
    using NumericError::NumericError;
};

class QuadratureError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace zeromode
