// Copyright 2026 The cgplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CGPLAB_ERRORS_HPP_
#define CGPLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace cgplab {

/// Base for every error caused by the caller's input (bad shape, a matrix
/// that is not unitary, a degenerate Hamiltonian, ...). The CLI maps these
/// to exit code 2.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string kind, const std::string& what)
      : std::invalid_argument(what), kind_(std::move(kind)) {}

  /// Short machine-readable tag, e.g. "shape", "not_unitary".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ShapeError : public InputError {
 public:
  explicit ShapeError(const std::string& what) : InputError("shape", what) {}
};

class NotUnitaryError : public InputError {
 public:
  explicit NotUnitaryError(const std::string& what)
      : InputError("not_unitary", what) {}
};

class NotDensityError : public InputError {
 public:
  explicit NotDensityError(const std::string& what)
      : InputError("not_density", what) {}
};

class NotHermitianError : public InputError {
 public:
  explicit NotHermitianError(const std::string& what)
      : InputError("not_hermitian", what) {}
};

/// Eigenvalue gap at or below the configured threshold.
class DegeneracyError : public InputError {
 public:
  explicit DegeneracyError(const std::string& what)
      : InputError("degenerate", what) {}
};

/// Dimension above the superoperator cap.
class CapacityError : public InputError {
 public:
  explicit CapacityError(const std::string& what)
      : InputError("capacity", what) {}
};

/// Eigenvector levels could not be matched between neighbouring points.
class TrackingError : public InputError {
 public:
  explicit TrackingError(const std::string& what)
      : InputError("tracking", what) {}
};

/// Round-off beyond what the algorithm can absorb. Not the caller's fault.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cgplab

#endif  // CGPLAB_ERRORS_HPP_
