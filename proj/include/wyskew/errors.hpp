// Copyright 2026 The wyskew Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace wyskew {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input failed a structural or numerical validity check (non-Hermitian,
/// negative eigenvalue, bad weights, parameter out of range, ...).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Operands have incompatible dimensions.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// The Hermitian eigensolver did not converge.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// Malformed matrix file or document.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace wyskew
