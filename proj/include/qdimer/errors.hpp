#pragma once

#include <stdexcept>
#include <string>

namespace qdimer {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A q-deformed function was evaluated outside its admissible window
/// (q > 1 and 1 + (1 - q) x <= 0), or a logarithm received x <= 0.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Every q-Boltzmann weight was cut off, so the partition function is zero.
class DegenerateState : public Error {
public:
    using Error::Error;
};

/// The beta(beta*) parametrization is singular: its denominator or its
/// derivative vanishes.
class SingularMap : public Error {
public:
    using Error::Error;
};

class InsufficientGrid : public Error {
public:
    using Error::Error;
};

class DivergentIntegral : public Error {
public:
    using Error::Error;
};

class NumericalBreakdown : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace qdimer
