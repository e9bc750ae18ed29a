#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infopower {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class InvalidArguments : public Error {
  public:
    using Error::Error;
};

class NotHermitian : public Error {
  public:
    using Error::Error;
};

/// A matrix that must be positive semidefinite has a negative eigenvalue.
/// Carries the offending element index and the minimum eigenvalue found.
class NotPositive : public Error {
  public:
    NotPositive(std::string message, std::size_t index, double min_eigenvalue)
        : Error(std::move(message)), index(index), min_eigenvalue(min_eigenvalue) {}

    std::size_t index;
    double min_eigenvalue;
};

/// POVM elements do not sum to the identity. Carries the deviation norm.
class NotComplete : public Error {
  public:
    NotComplete(std::string message, double deviation)
        : Error(std::move(message)), deviation(deviation) {}

    double deviation;
};

class NegativePrior : public Error {
  public:
    using Error::Error;
};

class PriorsNotNormalized : public Error {
  public:
    using Error::Error;
};

class InvalidDensityMatrix : public Error {
  public:
    using Error::Error;
};

class InvalidEnsemble : public Error {
  public:
    using Error::Error;
};

class InvalidDistribution : public Error {
  public:
    using Error::Error;
};

class ZeroWeightState : public Error {
  public:
    using Error::Error;
};

/// The averaged state of an ensemble is numerically singular, so the inverse
/// square root needed by the duality maps does not exist.
class SingularAverageState : public Error {
  public:
    SingularAverageState(std::string message, double min_eigenvalue)
        : Error(std::move(message)), min_eigenvalue(min_eigenvalue) {}

    double min_eigenvalue;
};

/// All updated states vanished during an ascent step (step size far too large).
class DegenerateUpdate : public Error {
  public:
    using Error::Error;
};

class NotCommuting : public Error {
  public:
    using Error::Error;
};

class InvalidTable : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class InvalidSpec : public Error {
  public:
    using Error::Error;
};

class DimensionLimitExceeded : public Error {
  public:
    using Error::Error;
};

}  // namespace infopower
