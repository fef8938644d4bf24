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

#include "raygeo/error.hpp"

namespace raygeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::OrthogonalPair: return "OrthogonalPair";
    case ErrorKind::OrthogonalComponents: return "OrthogonalComponents";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace raygeo
