// Copyright 2026 The hubcast developers
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

#include <complex>
#include <stdexcept>
#include <string>

namespace hubcast {

using cplx = std::complex<double>;

/// Bad call-site input: out-of-range index, duplicate qubit, empty list, ...
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Payload fails a mathematical precondition (e.g. a matrix that is not
/// unitary within tolerance).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Request is well-formed but too large for dense simulation.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical contract used across the library.  Checks of unitarity, state
// norms and fidelities use kTightTol; gate-level circuit equivalence (longer
// products, more roundoff) uses kCircuitTol; probabilities below kProbFloor
// are treated as exact zeros when enumerating measurement branches.
inline constexpr double kTightTol = 1e-10;
inline constexpr double kCircuitTol = 1e-9;
inline constexpr double kProbFloor = 1e-14;

}  // namespace hubcast
