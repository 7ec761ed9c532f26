// Copyright 2026 The HQPU Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hqpu {

/// Malformed or inconsistent run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter combination hits a resonance where a closed-form expression
/// divides by zero (CLI exit code 3). `resonance()` names the vanishing
/// denominator, e.g. "delta - sqrt(2)*nu".
class DegenerateParameterError : public std::runtime_error {
 public:
  DegenerateParameterError(std::string resonance, const std::string& what)
      : std::runtime_error(what), resonance_(std::move(resonance)) {}

  const std::string& resonance() const noexcept { return resonance_; }

 private:
  std::string resonance_;
};

/// Time propagation failed: non-finite amplitudes, step-size underflow, or a
/// failed step-refinement check (CLI exit code 4).
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hqpu
