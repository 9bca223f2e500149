#pragma once

#include <stdexcept>

namespace sptunnel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical or physical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

// A series, continued fraction or iteration hit its cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NoRootError : public Error {
 public:
  using Error::Error;
};

// Amplitude solve hit a vanishing denominator.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Numerov grid too coarse or too short for the requested energy.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace sptunnel
