// Copyright 2026 The qlent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLENT_ERRORS_HPP
#define QLENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlent {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched or out-of-range matrix dimensions (bad splits, size caps, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input expected to be Hermitian deviates beyond tolerance.
class HermiticityError : public Error {
 public:
  HermiticityError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

// Iterative solver failed to reach its stopping criterion.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A state failed one of the density-matrix invariants.
class ValidationError : public Error {
 public:
  enum class Kind { Hermiticity, Trace, Positivity, Norm, Weights };

  ValidationError(Kind kind, const std::string& what, double deviation)
      : Error(what), kind_(kind), deviation_(deviation) {}
  Kind kind() const { return kind_; }
  double deviation() const { return deviation_; }

 private:
  Kind kind_;
  double deviation_;
};

// A projector set violates completeness or orthogonality.
class MeasurementError : public Error {
 public:
  using Error::Error;
};

// Invalid argument to an entropy measure or a check configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// File content is not well-formed (syntax or schema).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qlent

#endif  // QLENT_ERRORS_HPP
