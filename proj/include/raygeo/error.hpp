// Copyright 2026 The raygeo Authors
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
#include <string_view>

namespace raygeo {

enum class ErrorKind {
  DimensionMismatch,
  ZeroArgument,
  ZeroVector,
  OrthogonalPair,
  OrthogonalComponents,
  InvalidWeight,
  DegenerateTriple,
  NotOrthogonal,
  NotCommuting,
  NotContained,
  PreconditionUnmet,
  NotIsometry,
  NotInjective,
  UnknownLaw,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Domain error. `detail()` carries a machine-readable qualifier, e.g. the
/// offending pair ("x,y") for OrthogonalPair or the failed condition for
/// PreconditionUnmet.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, std::string detail = {})
      : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace raygeo
